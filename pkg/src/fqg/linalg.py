"""Exact linear algebra over CycNum scalars.

Vectors travel either as dense lists or as sparse {column: CycNum} dicts;
the workhorse is a streaming echelon accumulator over sparse rows.  A
Subspace stores its reduced row-echelon basis, which is a canonical form:
two subspaces are equal iff their stored bases are identical.
"""

from __future__ import annotations

from .cyclotomic import CycNum, one, zero
from .errors import DimensionError

__all__ = [
    "ExactMatrix",
    "Subspace",
    "Echelon",
    "rref",
    "span",
    "member",
    "solve_linear",
    "intersect",
    "sum_subspaces",
]

_ZERO = zero()
_ONE = one()


def _coerce_scalar(x) -> CycNum:
    return x if isinstance(x, CycNum) else CycNum._coerce(x)


def to_sparse(vec) -> dict[int, CycNum]:
    if isinstance(vec, dict):
        return {c: _coerce_scalar(v) for c, v in vec.items() if _coerce_scalar(v)}
    return {i: _coerce_scalar(v) for i, v in enumerate(vec) if _coerce_scalar(v)}


def to_dense(row: dict[int, CycNum], n: int) -> list[CycNum]:
    return [row.get(i, _ZERO) for i in range(n)]


def _sub_scaled(row: dict, coef: CycNum, other: dict) -> None:
    """row -= coef * other, in place, dropping zero entries."""
    for c, v in other.items():
        w = row.get(c, _ZERO) - coef * v
        if w:
            row[c] = w
        else:
            row.pop(c, None)


class Echelon:
    """Streaming row-echelon accumulator over sparse rows."""

    def __init__(self):
        self.rows: dict[int, dict[int, CycNum]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row) -> dict[int, CycNum]:
        """Remainder of ``row`` after reduction against the stored rows."""
        row = dict(to_sparse(row))
        while row:
            c = min(row)
            piv = self.rows.get(c)
            if piv is None:
                return row
            _sub_scaled(row, row[c], piv)
        return row

    def insert(self, row) -> bool:
        """Add a row; returns True when it enlarged the row space."""
        red = self.reduce(row)
        if not red:
            return False
        c = min(red)
        inv = red[c].inverse()
        self.rows[c] = {k: v * inv for k, v in red.items()}
        return True

    def rref_rows(self) -> list[dict[int, CycNum]]:
        """Fully back-substituted rows, sorted by pivot column."""
        pivots = sorted(self.rows)
        for p in reversed(pivots):
            piv_row = self.rows[p]
            for q in pivots:
                if q < p and p in self.rows[q]:
                    _sub_scaled(self.rows[q], self.rows[q][p], piv_row)
        return [dict(self.rows[p]) for p in pivots]


class ExactMatrix:
    """Dense matrix of CycNum entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols: int | None = None):
        self.data = [[_coerce_scalar(x) for x in row] for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(r) != self.cols for r in self.data):
                raise DimensionError("ragged rows in matrix")
            if cols is not None and cols != self.cols:
                raise DimensionError("explicit column count disagrees with data")
        else:
            self.cols = cols or 0

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    def row(self, i: int) -> list[CycNum]:
        return self.data[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    __hash__ = None

    def __repr__(self) -> str:
        body = "; ".join(", ".join(x.literal() for x in row) for row in self.data)
        return f"ExactMatrix[{self.rows}x{self.cols}: {body}]"

    def rref(self) -> "ExactMatrix":
        """Reduced row-echelon form; zero rows dropped, row space preserved."""
        ech = Echelon()
        for row in self.data:
            ech.insert(row)
        return ExactMatrix([to_dense(r, self.cols) for r in ech.rref_rows()], cols=self.cols)

    def rank(self) -> int:
        ech = Echelon()
        for row in self.data:
            ech.insert(row)
        return ech.rank


def rref(m: ExactMatrix) -> ExactMatrix:
    return m.rref()


class Subspace:
    """Exact linear subspace, identified by its canonical RREF basis."""

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim: int, echelon_rows):
        self.ambient_dim = ambient_dim
        rows = sorted((dict(r) for r in echelon_rows), key=min)
        for r in rows:
            if r and max(r) >= ambient_dim:
                raise DimensionError("basis vector exceeds ambient dimension")
        self.rows = tuple(rows)
        self.pivots = tuple(min(r) for r in rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> ExactMatrix:
        return ExactMatrix([to_dense(r, self.ambient_dim) for r in self.rows], cols=self.ambient_dim)

    def reduce(self, vec) -> dict[int, CycNum]:
        row = dict(to_sparse(vec))
        by_pivot = dict(zip(self.pivots, self.rows))
        while row:
            c = min(row)
            piv = by_pivot.get(c)
            if piv is None:
                return row
            _sub_scaled(row, row[c], piv)
        return row

    def contains(self, vec) -> bool:
        if not isinstance(vec, dict) and len(vec) != self.ambient_dim:
            raise DimensionError(
                f"vector has length {len(vec)}, ambient dimension is {self.ambient_dim}"
            )
        return not self.reduce(vec)

    def __le__(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("subspaces live in different ambient spaces")
        return all(not other.reduce(r) for r in self.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def span(ambient_dim: int, vectors) -> Subspace:
    """Canonical subspace spanned by the given vectors (dense or sparse)."""
    ech = Echelon()
    for v in vectors:
        if not isinstance(v, dict) and len(v) != ambient_dim:
            raise DimensionError(
                f"vector has length {len(v)}, ambient dimension is {ambient_dim}"
            )
        ech.insert(v)
    return Subspace(ambient_dim, ech.rref_rows())


def member(s: Subspace, vec) -> bool:
    return s.contains(vec)


def solve_linear(a: ExactMatrix, b) -> tuple[list[CycNum], Subspace] | None:
    """Solve a x = b exactly.

    Returns (particular solution, nullspace) when consistent, None otherwise.
    """
    b = [_coerce_scalar(x) for x in b]
    if len(b) != a.rows:
        raise DimensionError("right-hand side length does not match row count")
    n = a.cols
    ech = Echelon()
    for row, rhs in zip(a.data, b):
        aug = to_sparse(row)
        if rhs:
            aug[n] = rhs
        ech.insert(aug)
    if n in ech.rows:  # a pivot in the augmented column: inconsistent
        return None
    rows = ech.rref_rows()
    particular = [_ZERO] * n
    for r in rows:
        particular[min(r)] = r.get(n, _ZERO)
    pivots = set(min(r) for r in rows)
    null_rows = []
    for f in range(n):
        if f in pivots:
            continue
        vec = {f: _ONE}
        for r in rows:
            coef = r.get(f)
            if coef:
                vec[min(r)] = -coef
        null_rows.append(vec)
    return particular, span(n, null_rows)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Exact intersection via the coefficient-space kernel."""
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")
    d1, d2 = s1.dim, s2.dim
    if d1 == 0 or d2 == 0:
        return span(s1.ambient_dim, [])
    # columns of the kernel system: d1 coefficients for s1, d2 for s2
    rows = []
    for j in range(s1.ambient_dim):
        row = {}
        for r, vec in enumerate(s1.rows):
            v = vec.get(j)
            if v:
                row[r] = v
        for r, vec in enumerate(s2.rows):
            v = vec.get(j)
            if v:
                row[d1 + r] = -v
        rows.append(to_dense(row, d1 + d2))
    sol = solve_linear(ExactMatrix(rows, cols=d1 + d2), [_ZERO] * s1.ambient_dim)
    assert sol is not None  # homogeneous systems are always consistent
    _, kernel = sol
    vecs = []
    for krow in kernel.rows:
        combo: dict[int, CycNum] = {}
        for r, coef in krow.items():
            if r < d1:
                _sub_scaled(combo, -coef, s1.rows[r])
        vecs.append(combo)
    return span(s1.ambient_dim, vecs)


def sum_subspaces(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")
    return span(s1.ambient_dim, list(s1.rows) + list(s2.rows))

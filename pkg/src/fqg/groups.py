"""Finite group multiplication tables and characters of abelian groups.

Characters are obtained from a Smith-normal-form decomposition of the
multiplication-table presentation, so any abelian table works, not just
ones built by the cyclic/product constructors.
"""

from __future__ import annotations

from .errors import ParameterError, UnsupportedInputError


class FiniteGroupTable:
    """A finite group given by its multiplication table.

    ``mul[i][j]`` is the index of the product of elements i and j.  Group
    axioms are checked on construction.
    """

    def __init__(self, mul, names=None):
        mul = tuple(tuple(int(x) for x in row) for row in mul)
        n = len(mul)
        if n == 0 or any(len(row) != n for row in mul):
            raise ParameterError("multiplication table must be square and nonempty")
        if any(not 0 <= x < n for row in mul for x in row):
            raise ParameterError("table entries must be element indices")
        identity = None
        for e in range(n):
            if all(mul[e][g] == g and mul[g][e] == g for g in range(n)):
                identity = e
                break
        if identity is None:
            raise ParameterError("table has no identity element")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise ParameterError(f"table is not associative at ({a},{b},{c})")
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if mul[a][b] == identity and mul[b][a] == identity:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise ParameterError(f"element {a} has no inverse")
        self.order = n
        self.mul = mul
        self.inv = tuple(inv)
        self.identity = identity
        self.names = tuple(names) if names else tuple(str(i) for i in range(n))

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroupTable":
        if n < 1:
            raise ParameterError("cyclic group order must be positive")
        mul = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(mul, names=[str(i) for i in range(n)])

    @classmethod
    def direct_product(cls, a: "FiniteGroupTable", b: "FiniteGroupTable") -> "FiniteGroupTable":
        n, m = a.order, b.order

        def idx(i, j):
            return i * m + j

        mul = [[0] * (n * m) for _ in range(n * m)]
        for i1 in range(n):
            for j1 in range(m):
                for i2 in range(n):
                    for j2 in range(m):
                        mul[idx(i1, j1)][idx(i2, j2)] = idx(a.mul[i1][i2], b.mul[j1][j2])
        names = [f"({a.names[i]},{b.names[j]})" for i in range(n) for j in range(m)]
        return cls(mul, names=names)

    def is_abelian(self) -> bool:
        return all(
            self.mul[a][b] == self.mul[b][a] for a in range(self.order) for b in range(self.order)
        )

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul[x][g]
            k += 1
        return k

    def power(self, g: int, k: int) -> int:
        x = self.identity
        k %= self.element_order(g)
        for _ in range(k):
            x = self.mul[x][g]
        return x

    def __repr__(self) -> str:
        return f"FiniteGroupTable(order {self.order})"


def parse_group_spec(spec: str) -> FiniteGroupTable:
    """Parse CLI group descriptions like ``z2``, ``z3``, ``z2xz2xz4``."""
    parts = spec.lower().split("x")
    tables = []
    for p in parts:
        p = p.strip()
        if not p.startswith("z") or not p[1:].isdigit():
            raise ParameterError(f"bad group spec {spec!r}; expected products of zN")
        tables.append(FiniteGroupTable.cyclic(int(p[1:])))
    g = tables[0]
    for t in tables[1:]:
        g = FiniteGroupTable.direct_product(g, t)
    return g


def _smith_normal_form(mat):
    """Diagonalize an integer matrix M -> U M V; returns (diag, V).

    Only V (column transform) is tracked; it is what coordinates need.
    """
    m = [list(row) for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def col_op(j1, j2, q):  # col j2 -= q * col j1
        for r in range(rows):
            m[r][j2] -= q * m[r][j1]
        for r in range(cols):
            v[r][j2] -= q * v[r][j1]

    def col_swap(j1, j2):
        for r in range(rows):
            m[r][j1], m[r][j2] = m[r][j2], m[r][j1]
        for r in range(cols):
            v[r][j1], v[r][j2] = v[r][j2], v[r][j1]

    def row_op(i1, i2, q):  # row i2 -= q * row i1
        for c in range(cols):
            m[i2][c] -= q * m[i1][c]

    def row_swap(i1, i2):
        m[i1], m[i2] = m[i2], m[i1]

    t = 0
    while t < min(rows, cols):
        # find a nonzero pivot in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            # clear column t then row t; repeat until both stay clear
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    row_op(t, i, q)
                    if m[i][t]:
                        row_swap(t, i)
            if any(m[i][t] for i in range(t + 1, rows)):
                continue
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    col_op(t, j, q)
                    if m[t][j]:
                        col_swap(t, j)
            if not any(m[t][j] for j in range(t + 1, cols)) and not any(
                m[i][t] for i in range(t + 1, rows)
            ):
                break
        if m[t][t] < 0:
            for r in range(rows):
                m[r][t] = -m[r][t]
            for r in range(cols):
                v[r][t] = -v[r][t]
        t += 1
    diag = [m[i][i] for i in range(min(rows, cols))]
    return diag, v


def abelian_coordinates(g: FiniteGroupTable):
    """Invariant-factor coordinates for an abelian group.

    Returns (factors, coords) with factors = [d_1, ..., d_r] (each > 1) and
    coords[g] a tuple in Z_{d_1} x ... x Z_{d_r}, such that multiplication
    becomes coordinatewise addition.
    """
    if not g.is_abelian():
        raise UnsupportedInputError("group is not abelian")
    n = g.order
    relations = []
    for a in range(n):
        row = [0] * n
        row[a] = g.element_order(a)
        relations.append(row)
    for a in range(n):
        for b in range(a, n):
            c = g.mul[a][b]
            row = [0] * n
            row[a] += 1
            row[b] += 1
            row[c] -= 1
            if any(row):
                relations.append(row)
    diag, v = _smith_normal_form(relations)
    # element a corresponds to the unit row e_a; its coordinates are (e_a . V)
    # reduced modulo the invariant factors
    keep = [(i, d) for i, d in enumerate(diag) if d not in (0, 1)]
    factors = [d for _, d in keep]
    coords = []
    for a in range(n):
        coords.append(tuple(v[a][i] % d for i, d in keep))
    # sanity: the map must be an isomorphism onto the product
    prod = 1
    for d in factors:
        prod *= d
    if prod != n or len(set(coords)) != n:
        raise UnsupportedInputError("failed to decompose the abelian group")
    for a in range(n):
        for b in range(n):
            expect = tuple((x + y) % d for x, y, d in zip(coords[a], coords[b], factors))
            if coords[g.mul[a][b]] != expect:
                raise UnsupportedInputError("abelian decomposition is inconsistent")
    return factors, coords

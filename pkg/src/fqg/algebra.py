"""Multi-matrix *-algebras, their tensor squares/cubes, and linear functionals.

An algebra is a direct sum of full matrix blocks M_{n_1} + ... + M_{n_N}.
The canonical basis consists of the matrix units, ordered block-major and
row-major inside each block.  Products of basis elements are again single
basis elements (or zero), which keeps every multiplication sparse.
"""

from __future__ import annotations

from .cyclotomic import CycNum, one, zero
from .errors import DimensionError, SignatureError

_ZERO = zero()
_ONE = one()


def _cs(x) -> CycNum:
    return x if isinstance(x, CycNum) else CycNum._coerce(x)


class AlgSignature:
    """Block sizes of a multi-matrix algebra plus basis bookkeeping."""

    __slots__ = ("blocks", "dim", "block_of", "row_of", "col_of", "offset", "_star", "_colkey", "_rowkey")

    def __init__(self, blocks):
        blocks = tuple(int(b) for b in blocks)
        if not blocks or any(b < 1 for b in blocks):
            raise DimensionError("block sizes must be positive integers")
        self.blocks = blocks
        self.offset = []
        total = 0
        for n in blocks:
            self.offset.append(total)
            total += n * n
        self.dim = total
        self.block_of = [0] * total
        self.row_of = [0] * total
        self.col_of = [0] * total
        for b, n in enumerate(blocks):
            base = self.offset[b]
            for r in range(n):
                for c in range(n):
                    u = base + r * n + c
                    self.block_of[u] = b
                    self.row_of[u] = r
                    self.col_of[u] = c
        self._star = [self.index(self.block_of[u], self.col_of[u], self.row_of[u]) for u in range(total)]
        self._colkey = [(self.block_of[u], self.col_of[u]) for u in range(total)]
        self._rowkey = [(self.block_of[u], self.row_of[u]) for u in range(total)]

    def index(self, block: int, r: int, c: int) -> int:
        return self.offset[block] + r * self.blocks[block] + c

    def bmul(self, u: int, v: int) -> int | None:
        """Index of (basis u)*(basis v), or None when the product is zero."""
        b = self.block_of[u]
        if b != self.block_of[v] or self.col_of[u] != self.row_of[v]:
            return None
        return self.offset[b] + self.row_of[u] * self.blocks[b] + self.col_of[v]

    def bstar(self, u: int) -> int:
        return self._star[u]

    def unit_coords(self) -> dict[int, CycNum]:
        return {self.index(b, r, r): _ONE for b, n in enumerate(self.blocks) for r in range(n)}

    def unit(self) -> "AlgElement":
        return AlgElement(self, self.unit_coords())

    def zero_element(self) -> "AlgElement":
        return AlgElement(self, {})

    def basis_element(self, u: int) -> "AlgElement":
        return AlgElement(self, {u: _ONE})

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgSignature) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"AlgSignature{self.blocks}"


def _check_sig(a, b):
    if a.signature != b.signature:
        raise SignatureError(f"signature mismatch: {a.signature} vs {b.signature}")


class AlgElement:
    """Element of a multi-matrix algebra, sparse over the matrix-unit basis."""

    __slots__ = ("signature", "coords")

    def __init__(self, signature: AlgSignature, coords: dict):
        self.signature = signature
        self.coords = {}
        for u, v in coords.items():
            v = _cs(v)
            if v:
                if not 0 <= u < signature.dim:
                    raise DimensionError(f"basis index {u} out of range")
                self.coords[u] = v

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "AlgElement") -> "AlgElement":
        _check_sig(self, other)
        out = dict(self.coords)
        for u, v in other.coords.items():
            w = out.get(u, _ZERO) + v
            if w:
                out[u] = w
            else:
                out.pop(u, None)
        return AlgElement(self.signature, out)

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.signature, {u: -v for u, v in self.coords.items()})

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + (-other)

    def scaled(self, s) -> "AlgElement":
        s = _cs(s)
        return AlgElement(self.signature, {u: v * s for u, v in self.coords.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgElement):
            return self.scaled(other)
        _check_sig(self, other)
        sig = self.signature
        out: dict[int, CycNum] = {}
        for u, vu in self.coords.items():
            for w, vw in other.coords.items():
                t = sig.bmul(u, w)
                if t is None:
                    continue
                val = out.get(t, _ZERO) + vu * vw
                if val:
                    out[t] = val
                else:
                    out.pop(t, None)
        return AlgElement(sig, out)

    def __rmul__(self, other) -> "AlgElement":
        return self.scaled(other)  # scalars commute with everything

    def star(self) -> "AlgElement":
        sig = self.signature
        return AlgElement(sig, {sig.bstar(u): v.conj() for u, v in self.coords.items()})

    def dense(self) -> list[CycNum]:
        return [self.coords.get(u, _ZERO) for u in range(self.signature.dim)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgElement)
            and self.signature == other.signature
            and self.coords == other.coords
        )

    __hash__ = None

    def describe(self, names=None) -> str:
        if not self.coords:
            return "0"
        names = names or [f"b{u}" for u in range(self.signature.dim)]
        parts = []
        for u in sorted(self.coords):
            v = self.coords[u]
            parts.append(f"({v.literal()})*{names[u]}")
        return " + ".join(parts)

    __repr__ = describe


class TensorElem:
    """Element of A tensor A (arity 2) or A tensor A tensor A (arity 3)."""

    __slots__ = ("signature", "arity", "coeffs")

    def __init__(self, signature: AlgSignature, arity: int, coeffs: dict):
        if arity not in (2, 3):
            raise DimensionError("tensor arity must be 2 or 3")
        self.signature = signature
        self.arity = arity
        self.coeffs = {}
        for key, v in coeffs.items():
            v = _cs(v)
            if not v:
                continue
            if len(key) != arity or any(not 0 <= i < signature.dim for i in key):
                raise DimensionError(f"bad tensor index {key}")
            self.coeffs[tuple(key)] = v

    @classmethod
    def _raw(cls, signature, arity, coeffs):
        self = object.__new__(cls)
        self.signature = signature
        self.arity = arity
        self.coeffs = coeffs
        return self

    @classmethod
    def pure(cls, a: AlgElement, b: AlgElement, c: AlgElement | None = None) -> "TensorElem":
        _check_sig(a, b)
        if c is None:
            coeffs = {
                (u, v): va * vb for u, va in a.coords.items() for v, vb in b.coords.items()
            }
            return cls(a.signature, 2, coeffs)
        _check_sig(a, c)
        coeffs = {
            (u, v, w): va * vb * vc
            for u, va in a.coords.items()
            for v, vb in b.coords.items()
            for w, vc in c.coords.items()
        }
        return cls(a.signature, 3, coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TensorElem") -> "TensorElem":
        self._compat(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            w = out.get(k, _ZERO) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return TensorElem._raw(self.signature, self.arity, out)

    def __neg__(self) -> "TensorElem":
        return TensorElem._raw(self.signature, self.arity, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "TensorElem") -> "TensorElem":
        return self + (-other)

    def scaled(self, s) -> "TensorElem":
        s = _cs(s)
        out = {k: v * s for k, v in self.coeffs.items()} if s else {}
        return TensorElem._raw(self.signature, self.arity, out)

    def _compat(self, other):
        if self.signature != other.signature:
            raise SignatureError("tensor signature mismatch")
        if self.arity != other.arity:
            raise DimensionError("tensor arity mismatch")

    def __mul__(self, other):
        if not isinstance(other, TensorElem):
            return self.scaled(other)
        self._compat(other)
        sig = self.signature
        rowkey = sig._rowkey
        colkey = sig._colkey
        offset, blocks = sig.offset, sig.blocks
        row_of, col_of = sig.row_of, sig.col_of
        bucket: dict[tuple, list] = {}
        for key2, v2 in other.coeffs.items():
            bkey = tuple(rowkey[i] for i in key2)
            bucket.setdefault(bkey, []).append((key2, v2))
        out: dict[tuple, CycNum] = {}
        for key1, v1 in self.coeffs.items():
            lst = bucket.get(tuple(colkey[i] for i in key1))
            if not lst:
                continue
            for key2, v2 in lst:
                tgt = tuple(
                    offset[sig.block_of[i]] + row_of[i] * blocks[sig.block_of[i]] + col_of[j]
                    for i, j in zip(key1, key2)
                )
                val = out.get(tgt, _ZERO) + v1 * v2
                if val:
                    out[tgt] = val
                else:
                    out.pop(tgt, None)
        return TensorElem._raw(self.signature, self.arity, out)

    def __rmul__(self, other) -> "TensorElem":
        return self.scaled(other)

    def star(self) -> "TensorElem":
        st = self.signature.bstar
        return TensorElem._raw(
            self.signature,
            self.arity,
            {tuple(st(i) for i in k): v.conj() for k, v in self.coeffs.items()},
        )

    def flip(self) -> "TensorElem":
        if self.arity != 2:
            raise DimensionError("flip is defined on arity-2 tensors")
        return TensorElem._raw(self.signature, 2, {(j, i): v for (i, j), v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElem)
            and self.signature == other.signature
            and self.arity == other.arity
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def describe(self, names=None) -> str:
        if not self.coeffs:
            return "0"
        names = names or [f"b{u}" for u in range(self.signature.dim)]
        parts = []
        for key in sorted(self.coeffs):
            v = self.coeffs[key]
            legs = "(x)".join(names[i] for i in key)
            parts.append(f"({v.literal()})*{legs}")
        return " + ".join(parts)

    __repr__ = describe


class Functional:
    """Linear functional on the algebra, stored by its values on the basis."""

    __slots__ = ("signature", "dual")

    def __init__(self, signature: AlgSignature, dual: dict):
        self.signature = signature
        self.dual = {}
        for u, v in dual.items():
            v = _cs(v)
            if v:
                if not 0 <= u < signature.dim:
                    raise DimensionError(f"basis index {u} out of range")
                self.dual[u] = v

    def __call__(self, x: AlgElement) -> CycNum:
        _check_sig(self, x)
        total = _ZERO
        for u, v in x.coords.items():
            f = self.dual.get(u)
            if f:
                total = total + f * v
        return total

    def value_at(self, u: int) -> CycNum:
        return self.dual.get(u, _ZERO)

    def __add__(self, other: "Functional") -> "Functional":
        _check_sig(self, other)
        out = dict(self.dual)
        for u, v in other.dual.items():
            w = out.get(u, _ZERO) + v
            if w:
                out[u] = w
            else:
                out.pop(u, None)
        return Functional(self.signature, out)

    def scaled(self, s) -> "Functional":
        s = _cs(s)
        return Functional(self.signature, {u: v * s for u, v in self.dual.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Functional)
            and self.signature == other.signature
            and self.dual == other.dual
        )

    __hash__ = None

    def describe(self, names=None) -> str:
        names = names or [f"b{u}" for u in range(self.signature.dim)]
        if not self.dual:
            return "0"
        return " + ".join(f"({self.dual[u].literal()})*{names[u]}^" for u in sorted(self.dual))

    __repr__ = describe


def dual_basis(signature: AlgSignature, u: int) -> Functional:
    """The functional picking out the coefficient of basis element u."""
    return Functional(signature, {u: _ONE})

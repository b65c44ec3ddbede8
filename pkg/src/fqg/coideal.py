"""Idempotent states, coideal subalgebras, projections, integrals, normality.

The three coordinate systems of the same lattice:

* idempotent states, ordered by phi <= psi  iff  psi = phi * psi;
* unital left coideal *-subalgebras, via phi -> (id tensor phi)Delta(A);
* group-like projections, via phi = h(. p)/h(p).

Everything here is decided exactly; numeric positivity of states is
available separately and never gates a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgElement, Functional, TensorElem
from .cyclotomic import CycNum, one, zero
from .errors import NotAStateError, ParameterError, StructuralError
from .hopf import HopfData, convolve
from .linalg import Echelon, Subspace, span

_ZERO = zero()
_ONE = one()


@dataclass
class Coideal:
    """A subspace of the algebra with cached structural flags.

    Flags are tri-state: missing means unchecked.  A computed flag is
    write-once; recomputation must agree or something is badly wrong.
    """

    subspace: Subspace
    source_state: Functional | None = None
    integral: AlgElement | None = None
    flags: dict = field(default_factory=dict)

    def flag(self, name: str):
        return self.flags.get(name)

    def set_flag(self, name: str, value: bool) -> bool:
        old = self.flags.get(name)
        if old is None:
            self.flags[name] = value
        elif old != value:
            raise StructuralError(f"flag {name} recomputed with a different value")
        return value

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def basis_elements(self, h: HopfData) -> list[AlgElement]:
        return [AlgElement(h.signature, dict(r)) for r in self.subspace.rows]


def is_idempotent_state(h: HopfData, phi: Functional) -> bool:
    """Exact test phi = phi * phi; requires phi(1) = 1."""
    if phi(h.unit) != _ONE:
        raise NotAStateError("functional is not normalized: phi(1) != 1")
    return convolve(h, phi, phi) == phi


def state_leq(h: HopfData, phi: Functional, psi: Functional) -> bool:
    """The convolution order: phi <= psi iff psi = phi * psi."""
    for f in (phi, psi):
        if not is_idempotent_state(h, f):
            raise ParameterError("state_leq needs idempotent states")
    return convolve(h, phi, psi) == psi


def coideal_from_state(h: HopfData, phi: Functional) -> Coideal:
    """(id tensor phi)Delta(A) with unital/star/coideal flags computed."""
    if not is_idempotent_state(h, phi):
        raise ParameterError("coideal_from_state needs an idempotent state")
    d = h.dim
    vectors = []
    for x in range(d):
        row: dict[int, CycNum] = {}
        for (i, j), c in h.delta[x].coeffs.items():
            pj = phi.dual.get(j)
            if not pj:
                continue
            w = row.get(i, _ZERO) + c * pj
            if w:
                row[i] = w
            else:
                row.pop(i, None)
        vectors.append(row)
    c = Coideal(subspace=span(d, vectors), source_state=phi)
    ensure_unital(h, c)
    ensure_star_closed(h, c)
    ensure_coideal(h, c)
    return c


def ensure_unital(h: HopfData, c: Coideal) -> bool:
    if c.flag("is_unital") is None:
        c.set_flag("is_unital", c.subspace.contains(h.signature.unit_coords()))
    return c.flags["is_unital"]


def ensure_star_closed(h: HopfData, c: Coideal) -> bool:
    if c.flag("is_star_closed") is None:
        ok = all(
            c.subspace.contains(AlgElement(h.signature, dict(r)).star().coords)
            for r in c.subspace.rows
        )
        c.set_flag("is_star_closed", ok)
    return c.flags["is_star_closed"]


def ensure_coideal(h: HopfData, c: Coideal) -> bool:
    """Delta(L) c A tensor L, tested on the echelon basis of L."""
    if c.flag("is_coideal") is None:
        ok = True
        for r in c.subspace.rows:
            t = h.delta_of(AlgElement(h.signature, dict(r)))
            by_first: dict[int, dict[int, CycNum]] = {}
            for (i, j), v in t.coeffs.items():
                row = by_first.setdefault(i, {})
                row[j] = row.get(j, _ZERO) + v
            for row in by_first.values():
                if not c.subspace.contains({k: v for k, v in row.items() if v}):
                    ok = False
                    break
            if not ok:
                break
        c.set_flag("is_coideal", ok)
    return c.flags["is_coideal"]


def is_group_like_projection(h: HopfData, p: AlgElement) -> bool:
    """p = p* = p^2 and Delta(p)(1 tensor p) = p tensor p, all exact."""
    if p.star() != p or p * p != p:
        return False
    lhs = h.delta_of(p) * TensorElem.pure(h.unit, p)
    return lhs == TensorElem.pure(p, p)


def state_from_projection(h: HopfData, p: AlgElement) -> Functional:
    """The idempotent state x -> haar(x p)/haar(p) of a group-like projection."""
    if h.haar is None:
        raise ParameterError("algebra carries no Haar state")
    if not is_group_like_projection(h, p):
        raise ParameterError("element is not a group-like projection")
    hp = h.haar(p)
    if not hp:
        raise StructuralError("degenerate projection: haar(p) = 0")
    inv = hp.inverse()
    dual = {}
    for u in range(h.dim):
        val = h.haar(h.signature.basis_element(u) * p) * inv
        if val:
            dual[u] = val
    return Functional(h.signature, dual)


def find_integral(h: HopfData, c: Coideal) -> AlgElement:
    """The integral of a coideal: l with lx = xl = eps(x)l for x in L.

    The solution space inside L must be one-dimensional.  The returned
    representative is idempotent whenever eps(l) can be scaled to 1;
    otherwise the leading coordinate is normalized and
    ``flags['integral_is_projection']`` is set to False.
    """
    if not ensure_coideal(h, c):
        raise ParameterError("find_integral needs a verified coideal")
    basis = c.basis_elements(h)
    m = len(basis)
    if m == 0:
        raise StructuralError("zero subspace has no integral")
    ech = Echelon()
    for x in basis:
        ex = h.counit_of(x)
        for side in ("l", "r"):
            cols: dict[int, dict[int, CycNum]] = {}
            for r, w in enumerate(basis):
                u = w * x if side == "l" else x * w
                u = u - w.scaled(ex)
                for coord, v in u.coords.items():
                    cols.setdefault(coord, {})[r] = v
            for row in cols.values():
                ech.insert(row)
    nullity = m - ech.rank
    if nullity != 1:
        raise StructuralError(f"integral space has dimension {nullity}, expected 1")
    pivots = set(ech.rows)
    free = next(r for r in range(m) if r not in pivots)
    alpha = {free: _ONE}
    for row in ech.rref_rows():
        v = row.get(free)
        if v:
            alpha[min(row)] = -v
    l = h.signature.zero_element()
    for r, coef in alpha.items():
        l = l + basis[r].scaled(coef)
    el = h.counit_of(l)
    if el:
        l = l.scaled(el.inverse())
        c.set_flag("integral_is_projection", True)
    else:
        lead = min(l.coords)
        l = l.scaled(l.coords[lead].inverse())
        c.set_flag("integral_is_projection", False)
    c.integral = l
    return l


def adjoint_action(h: HopfData, a: AlgElement, b: AlgElement) -> AlgElement:
    """a . b = a_(1) b S(a_(2)), expanded over the comultiplication table."""
    if a.signature != h.signature or b.signature != h.signature:
        raise ParameterError("elements are not in this algebra")
    out = h.signature.zero_element()
    t = h.delta_of(a)
    for (u, v), cuv in t.coeffs.items():
        term = (h.signature.basis_element(u) * b) * h.antipode[v]
        if not term.is_zero():
            out = out + term.scaled(cuv)
    return out


def is_normal_coideal(h: HopfData, c: Coideal) -> bool:
    """Stability of the coideal under the adjoint action, on basis pairs."""
    if not ensure_coideal(h, c):
        raise ParameterError("is_normal_coideal needs a verified coideal")
    if c.flag("is_normal") is not None:
        return c.flags["is_normal"]
    ok = True
    basis = c.basis_elements(h)
    for u in range(h.dim):
        a = h.signature.basis_element(u)
        for w in basis:
            if not c.subspace.contains(adjoint_action(h, a, w).coords):
                ok = False
                break
        if not ok:
            break
    c.set_flag("is_normal", ok)
    return ok


def coideal_from_span(h: HopfData, vectors) -> Coideal:
    """Wrap explicit spanning vectors as a Coideal (flags computed lazily)."""
    return Coideal(subspace=span(h.dim, vectors))

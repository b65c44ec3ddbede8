"""Hopf *-algebra data on a multi-matrix chassis, with exact axiom checking.

All structure maps are stored by their values on the canonical basis;
linearity extends them everywhere.  Axiom verification therefore only has
to visit basis elements (or basis pairs, for the multiplicative laws),
which is complete and exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath
from gmpy2 import mpq

from .algebra import AlgElement, AlgSignature, Functional, TensorElem
from .cyclotomic import CycNum, one, zero, _conductor as _cyc_conductor
from .errors import SignatureError, StructuralError
from .linalg import Echelon

_ZERO = zero()
_ONE = one()
_ONE_Q = mpq(1)

MAX_WITNESSES = 8


@dataclass
class CheckResult:
    name: str
    ok: bool
    failures: list = field(default_factory=list)
    informational: bool = False
    note: str = ""

    def as_dict(self) -> dict:
        out = {"check": self.name, "ok": self.ok}
        if self.failures:
            out["witnesses"] = self.failures
        if self.informational:
            out["informational"] = True
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    subject: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks if not c.informational)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


class HopfData:
    """A finite quantum group presented by structure tables on the basis."""

    def __init__(
        self,
        signature: AlgSignature,
        delta: list[TensorElem],
        counit: list[CycNum],
        antipode: list[AlgElement],
        haar: Functional | None = None,
        name: str = "hopf-algebra",
        basis_names: list[str] | None = None,
        notes: dict | None = None,
    ):
        d = signature.dim
        if not (len(delta) == len(counit) == len(antipode) == d):
            raise SignatureError("structure tables must be total on the basis")
        self.signature = signature
        self.delta = list(delta)
        self.counit = [c if isinstance(c, CycNum) else CycNum._coerce(c) for c in counit]
        self.antipode = list(antipode)
        self.unit = signature.unit()
        self.haar = haar
        self.name = name
        self.basis_names = basis_names or [f"b{u}" for u in range(d)]
        self.notes = dict(notes or {})

    @property
    def dim(self) -> int:
        return self.signature.dim

    # -- linear extensions ---------------------------------------------------

    def delta_of(self, x: AlgElement) -> TensorElem:
        if x.signature != self.signature:
            raise SignatureError("element is not in this algebra")
        out: dict[tuple, CycNum] = {}
        for u, v in x.coords.items():
            for key, c in self.delta[u].coeffs.items():
                w = out.get(key, _ZERO) + v * c
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return TensorElem._raw(self.signature, 2, out)

    def counit_of(self, x: AlgElement) -> CycNum:
        total = _ZERO
        for u, v in x.coords.items():
            e = self.counit[u]
            if e:
                total = total + e * v
        return total

    def antipode_of(self, x: AlgElement) -> AlgElement:
        out = self.signature.zero_element()
        for u, v in x.coords.items():
            out = out + self.antipode[u].scaled(v)
        return out

    def delta_left(self, t: TensorElem) -> TensorElem:
        """(Delta tensor id) applied to an arity-2 tensor."""
        out: dict[tuple, CycNum] = {}
        for (i, j), c in t.coeffs.items():
            for (a, b), d in self.delta[i].coeffs.items():
                key = (a, b, j)
                w = out.get(key, _ZERO) + c * d
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return TensorElem._raw(self.signature, 3, out)

    def delta_right(self, t: TensorElem) -> TensorElem:
        """(id tensor Delta) applied to an arity-2 tensor."""
        out: dict[tuple, CycNum] = {}
        for (i, j), c in t.coeffs.items():
            for (a, b), d in self.delta[j].coeffs.items():
                key = (i, a, b)
                w = out.get(key, _ZERO) + c * d
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return TensorElem._raw(self.signature, 3, out)

    def unit_tensor(self, arity: int = 2) -> TensorElem:
        u = self.unit
        if arity == 2:
            return TensorElem.pure(u, u)
        return TensorElem.pure(u, u, u)

    def basis(self, u: int) -> AlgElement:
        return self.signature.basis_element(u)

    def __repr__(self) -> str:
        return f"HopfData({self.name}, dim {self.dim})"


def delta_of(h: HopfData, x: AlgElement) -> TensorElem:
    return h.delta_of(x)


def flip(t: TensorElem) -> TensorElem:
    return t.flip()


def tensor_mul(s: TensorElem, t: TensorElem) -> TensorElem:
    return s * t


def tensor_star(t: TensorElem) -> TensorElem:
    return t.star()


def alg_mul(x: AlgElement, y: AlgElement) -> AlgElement:
    return x * y


def alg_star(x: AlgElement) -> AlgElement:
    return x.star()


# -- axiom verification ---------------------------------------------------------
#
# The axiom checks visit O(dim^2) basis pairs with O(dim^2) tensor terms each,
# so the inner loops run on raw {exponent: mpq} dictionaries at one common
# conductor instead of CycNum objects.  Semantics are identical; only the
# scalar plumbing is flattened.


class _FastModel:
    """Structure tables of a HopfData flattened to integer scalar dictionaries.

    All coefficients are scaled by D, the lcm of their denominators, so the
    inner loops work on {exponent: int} dicts.  Checks compare expressions of
    equal total degree in the tables, so the scaling cancels; where degrees
    differ (e.g. Delta(u)Delta(v) against Delta(uv)) the lower-degree side is
    rescaled by D once, up front.
    """

    def __init__(self, h: HopfData):
        sig = h.signature
        d = sig.dim
        n = 1
        den = 1
        all_scalars = []
        for t in h.delta:
            all_scalars.extend(t.coeffs.values())
        all_scalars.extend(h.counit)
        for a in h.antipode:
            all_scalars.extend(a.coords.values())
        for v in all_scalars:
            n = math.lcm(n, v.n)
            for q in v.c.values():
                den = math.lcm(den, int(q.denominator))
        self.n = n
        self.D = den
        self.DD = den * den
        self.rew = _cyc_conductor(n).rewrite

        def raw(v):
            return {e: int(q.numerator) * (den // int(q.denominator))
                    for e, q in v.promoted(n).c.items()}

        self.dim = d
        self.delta = [{k: raw(v) for k, v in t.coeffs.items()} for t in h.delta]
        self.counit = [raw(v) for v in h.counit]
        self.antipode = [{u: raw(v) for u, v in a.coords.items()} for a in h.antipode]
        self.unit = {u: raw(v) for u, v in sig.unit_coords().items()}
        # degree-1 tables rescaled by D, for comparison against degree-2 products
        self.delta_D = [
            {k: {e: den * x for e, x in c.items()} for k, c in row.items()} for row in self.delta
        ]
        self.counit_D = [{e: den * x for e, x in c.items()} for c in self.counit]
        self.antipode_D = [
            {u: {e: den * x for e, x in c.items()} for u, c in a.items()} for a in self.antipode
        ]
        self.mt = [[sig.bmul(u, v) for v in range(d)] for u in range(d)]
        self.st = [sig.bstar(u) for u in range(d)]
        # intern the few distinct scalars of the Delta table and precompute
        # their pairwise products (already rewritten to canonical exponents)
        intern: dict[tuple, int] = {}
        scalars: list[dict] = []

        def sid_of(c: dict) -> int:
            key = tuple(sorted(c.items()))
            s = intern.get(key)
            if s is None:
                s = len(scalars)
                intern[key] = s
                scalars.append(c)
            return s

        self.delta_ids = [
            [(k, sid_of(c)) for k, c in row.items()] for row in self.delta
        ]
        ns = len(scalars)
        prod = []
        for a in range(ns):
            row = []
            for b in range(ns):
                out: dict = {}
                self.accum(out, 0, scalars[a], scalars[b])
                row.append(tuple(self.prune(out).get(0, {}).items()))
            prod.append(row)
        self.prod = prod

    def accum(self, out: dict, key, c: dict, a: dict) -> None:
        """out[key] += c * a, raw-scalar convolution with rewrite."""
        n, rew = self.n, self.rew
        acc = out.get(key)
        if acc is None:
            acc = {}
            out[key] = acc
        for e1, v1 in c.items():
            for e2, v2 in a.items():
                v = v1 * v2
                e = e1 + e2
                if e >= n:
                    e -= n
                terms = rew[e]
                if terms is None:
                    w = acc.get(e)
                    acc[e] = v if w is None else w + v
                else:
                    for e3, s in terms:
                        vv = v if s > 0 else -v
                        w = acc.get(e3)
                        acc[e3] = vv if w is None else w + vv

    @staticmethod
    def prune(out: dict) -> dict:
        for key in list(out):
            acc = {e: v for e, v in out[key].items() if v}
            if acc:
                out[key] = acc
            else:
                del out[key]
        return out

    def conj(self, a: dict) -> dict:
        n, rew = self.n, self.rew
        out: dict[int, object] = {}
        for e, v in a.items():
            e2 = (n - e) % n
            terms = rew[e2]
            if terms is None:
                w = out.get(e2)
                out[e2] = v if w is None else w + v
            else:
                for e3, s in terms:
                    vv = v if s > 0 else -v
                    w = out.get(e3)
                    out[e3] = vv if w is None else w + vv
        return {e: v for e, v in out.items() if v}

    def scalar_mul(self, c: dict, a: dict) -> dict:
        out: dict = {}
        self.accum(out, 0, c, a)
        return self.prune(out).get(0, {})


def _diff_witness(names, label, diff) -> tuple:
    if isinstance(diff, str):
        return (label, diff)
    if hasattr(diff, "describe"):
        return (label, diff.describe(names))
    return (label, str(diff))


def verify_hopf(h: HopfData, fail_fast: bool = False) -> VerificationReport:
    """Exact check of every Hopf *-algebra axiom on the canonical basis.

    With ``fail_fast`` the report stops after the first failing axiom
    (used to triage table variants cheaply).
    """
    fm = _FastModel(h)
    d = fm.dim
    names = h.basis_names
    report = VerificationReport(subject=h.name)

    def run(name, failures_iter, informational=False, note=""):
        failures = []
        count = 0
        for label in failures_iter:
            count += 1
            if len(failures) < MAX_WITNESSES:
                failures.append((label, ""))
            if fail_fast:
                break
        if count > len(failures):
            failures.append((f"... {count} failures total", ""))
        report.checks.append(
            CheckResult(name=name, ok=count == 0, failures=failures, informational=informational, note=note)
        )
        return count == 0

    def coassoc_failures():
        # accumulate LHS - RHS into one flat-keyed dict; pass iff all entries cancel
        n = fm.n
        dd = d * d
        rows = fm.delta_ids
        prod = fm.prod
        for x in range(d):
            acc: dict[int, int] = {}
            get = acc.get
            for (i, j), s1 in rows[x]:
                pr1 = prod[s1]
                base_j = j * n
                for (a, b), s2 in rows[i]:
                    off = ((a * d + b) * d) * n + base_j
                    for e3, vv in pr1[s2]:
                        q = off + e3
                        w = get(q)
                        acc[q] = vv if w is None else w + vv
                base_i = (i * dd) * n
                for (a, b), s2 in rows[j]:
                    off = base_i + (a * d + b) * n
                    for e3, vv in pr1[s2]:
                        q = off + e3
                        w = get(q)
                        acc[q] = -vv if w is None else w - vv
            if any(acc.values()):
                yield names[x]

    def counit_failures():
        for x in range(d):
            left: dict = {}
            right: dict = {}
            for (i, j), c in fm.delta[x].items():
                ei = fm.counit[i]
                if ei:
                    fm.accum(left, j, ei, c)
                ej = fm.counit[j]
                if ej:
                    fm.accum(right, i, ej, c)
            target = {x: {0: fm.DD}}
            if fm.prune(left) != target:
                yield f"(eps ox id)Delta({names[x]})"
            if fm.prune(right) != target:
                yield f"(id ox eps)Delta({names[x]})"

    def antipode_failures():
        for x in range(d):
            left: dict = {}
            right: dict = {}
            for (i, j), c in fm.delta[x].items():
                for u, s in fm.antipode[i].items():
                    t = fm.mt[u][j]
                    if t is not None:
                        fm.accum(left, t, c, s)
                for u, s in fm.antipode[j].items():
                    t = fm.mt[i][u]
                    if t is not None:
                        fm.accum(right, t, c, s)
            ex = fm.counit[x]
            target: dict = {}
            if ex:
                for u, v in fm.unit.items():
                    fm.accum(target, u, ex, v)
                fm.prune(target)
            if fm.prune(left) != target:
                yield f"m(S ox id)Delta({names[x]})"
            if fm.prune(right) != target:
                yield f"m(id ox S)Delta({names[x]})"

    def delta_unital_failures():
        out: dict = {}
        for u, cu in fm.unit.items():
            for key, c in fm.delta[u].items():
                fm.accum(out, key, cu, c)
        target: dict = {}
        for u, cu in fm.unit.items():
            for v, cv in fm.unit.items():
                fm.accum(target, (u, v), cu, cv)
        if fm.prune(out) != fm.prune(target):
            yield "Delta(1)"

    def delta_mult_failures():
        # flat-keyed accumulator: Delta(u)Delta(v) - D*Delta(uv) must cancel
        rowkey = h.signature._rowkey
        colkey = h.signature._colkey
        mt = fm.mt
        n = fm.n
        prod = fm.prod
        buckets = []
        for v in range(d):
            bucket: dict[tuple, list] = {}
            for (i2, j2), s2 in fm.delta_ids[v]:
                bucket.setdefault((rowkey[i2], rowkey[j2]), []).append((i2, j2, s2))
            buckets.append(bucket)
        flat_targets = []
        for row in fm.delta_D:
            flat = {}
            for (i, j), c in row.items():
                off = (i * d + j) * n
                for e, v in c.items():
                    flat[off + e] = v
            flat_targets.append(flat)
        for u in range(d):
            du_items = [
                (colkey[i1], colkey[j1], i1, j1, s1) for (i1, j1), s1 in fm.delta_ids[u]
            ]
            for v in range(d):
                bucket = buckets[v]
                t = mt[u][v]
                acc = dict(flat_targets[t]) if t is not None else {}
                get = acc.get
                for ck1, ck2, i1, j1, s1 in du_items:
                    lst = bucket.get((ck1, ck2))
                    if not lst:
                        continue
                    mrow1 = mt[i1]
                    mrow2 = mt[j1]
                    pr1 = prod[s1]
                    for i2, j2, s2 in lst:
                        off = (mrow1[i2] * d + mrow2[j2]) * n
                        for e3, vv in pr1[s2]:
                            q = off + e3
                            w = get(q)
                            acc[q] = -vv if w is None else w - vv
                if any(acc.values()):
                    yield f"Delta({names[u]}*{names[v]})"

    def counit_mult_failures():
        eps_one: dict = {}
        for u, cu in fm.unit.items():
            if fm.counit[u]:
                fm.accum(eps_one, 0, cu, fm.counit[u])
        if fm.prune(eps_one).get(0, {}) != {0: fm.DD}:
            yield "eps(1)"
        for u in range(d):
            eu = fm.counit[u]
            for v in range(d):
                t = fm.mt[u][v]
                rhs = fm.counit_D[t] if t is not None else {}
                lhs = fm.scalar_mul(eu, fm.counit[v]) if eu and fm.counit[v] else {}
                if lhs != rhs:
                    yield f"eps({names[u]}*{names[v]})"

    def s_antimult_failures():
        for u in range(d):
            su = fm.antipode[u]
            for v in range(d):
                t = fm.mt[u][v]
                lhs = fm.antipode_D[t] if t is not None else {}
                out: dict = {}
                for a, ca in fm.antipode[v].items():
                    for b, cb in su.items():
                        w = fm.mt[a][b]
                        if w is not None:
                            fm.accum(out, w, ca, cb)
                if fm.prune(out) != lhs:
                    yield f"S({names[u]}*{names[v]})"

    def star_compat_failures():
        for u in range(d):
            target = fm.delta[fm.st[u]]
            starred = {
                (fm.st[i], fm.st[j]): fm.conj(c) for (i, j), c in fm.delta[u].items()
            }
            if starred != target:
                yield f"Delta({names[u]}^*)"

    def s_star_involutive_failures():
        for u in range(d):
            # S(S(u)^*)^*: star of antipode row, push through S, star again
            mid: dict = {}
            for a, ca in fm.antipode[u].items():
                ca_c = fm.conj(ca)
                for b, cb in fm.antipode[fm.st[a]].items():
                    fm.accum(mid, b, ca_c, cb)
            fm.prune(mid)
            final = {fm.st[b]: fm.conj(c) for b, c in mid.items()}
            if final != {u: {0: fm.DD}}:
                yield f"S(S({names[u]})^*)^*"

    checks = [
        ("coassociativity", coassoc_failures, False, ""),
        ("counit", counit_failures, False, ""),
        ("antipode", antipode_failures, False, ""),
        ("comultiplication unital", delta_unital_failures, False, ""),
        ("comultiplication multiplicative", delta_mult_failures, False, ""),
        ("counit multiplicative", counit_mult_failures, False, ""),
        ("antipode antimultiplicative", s_antimult_failures, False, ""),
        ("comultiplication *-compatible", star_compat_failures, False, ""),
        (
            "antipode *-involutive",
            s_star_involutive_failures,
            True,
            "S(S(x)^*)^* = x; holds automatically for Hopf *-algebras, reported for information",
        ),
    ]
    for name, gen, informational, note in checks:
        ok = run(name, gen(), informational=informational, note=note)
        if fail_fast and not ok and not informational:
            break
    return report


# -- convolution and Haar states ----------------------------------------------------


def convolve(h: HopfData, f: Functional, g: Functional) -> Functional:
    """(f * g)(x) = (f tensor g) Delta(x)."""
    if f.signature != h.signature or g.signature != h.signature:
        raise SignatureError("functional signature mismatch")
    dual: dict[int, CycNum] = {}
    for u in range(h.dim):
        total = _ZERO
        for (i, j), c in h.delta[u].coeffs.items():
            fi = f.dual.get(i)
            if not fi:
                continue
            gj = g.dual.get(j)
            if not gj:
                continue
            total = total + c * fi * gj
        if total:
            dual[u] = total
    return Functional(h.signature, dual)


def counit_functional(h: HopfData) -> Functional:
    return Functional(h.signature, {u: h.counit[u] for u in range(h.dim)})


def slice_functional(h: HopfData, t: TensorElem, f: Functional, leg: int) -> AlgElement:
    """Contract one leg of an arity-2 tensor with a functional."""
    out: dict[int, CycNum] = {}
    for (i, j), c in t.coeffs.items():
        if leg == 2:
            keep, val = i, f.dual.get(j)
        else:
            keep, val = j, f.dual.get(i)
        if not val:
            continue
        w = out.get(keep, _ZERO) + c * val
        if w:
            out[keep] = w
        else:
            out.pop(keep, None)
    return AlgElement(h.signature, out)


def solve_haar(h: HopfData) -> Functional:
    """The unique state with (id tensor h)Delta = h(.)1, solved exactly.

    Raises StructuralError when the system is inconsistent or has more than
    one solution; either signals malformed Hopf data.
    """
    d = h.dim
    unit = h.signature.unit_coords()
    ech = Echelon()
    aug = d  # augmented column index
    for x in range(d):
        rows: dict[int, dict[int, CycNum]] = {}
        for (i, j), c in h.delta[x].coeffs.items():
            row = rows.setdefault(i, {})
            row[j] = row.get(j, _ZERO) + c
        for i, row in rows.items():
            ui = unit.get(i)
            if ui:
                row[x] = row.get(x, _ZERO) - ui
            ech.insert(row)
        # first legs absent from Delta(x) still constrain: 0 = h(x) * unit_i
        for i in unit:
            if i not in rows:
                ech.insert({x: unit[i]})
    norm_row = {u: v for u, v in unit.items()}
    norm_row[aug] = _ONE
    ech.insert(norm_row)
    if aug in ech.rows:
        raise StructuralError("Haar system is inconsistent; Hopf data is malformed")
    rows = ech.rref_rows()
    if len(rows) != d:
        raise StructuralError(
            f"Haar solution space has dimension {d - len(rows)} > 0; Hopf data is malformed"
        )
    dual = {}
    for r in rows:
        v = r.get(aug)
        if v:
            dual[min(r)] = v
    return Functional(h.signature, dual)


def verify_haar(h: HopfData, candidate: Functional, tolerance_bits: int = 40) -> VerificationReport:
    """Exact invariance/normalization/hermiticity checks plus a numeric
    positivity check of the Gram matrix (flagged as numeric)."""
    sig = h.signature
    d = sig.dim
    names = h.basis_names
    report = VerificationReport(subject=f"Haar candidate on {h.name}")

    report.checks.append(
        CheckResult(name="normalization h(1)=1", ok=candidate(h.unit) == _ONE)
    )

    unit = sig.unit_coords()
    fails_r, fails_l = [], []
    for x in range(d):
        hx = candidate.value_at(x)
        right: dict[int, CycNum] = {}
        left: dict[int, CycNum] = {}
        for (i, j), c in h.delta[x].coeffs.items():
            vj = candidate.value_at(j)
            if vj:
                w = right.get(i, _ZERO) + c * vj
                if w:
                    right[i] = w
                else:
                    right.pop(i, None)
            vi = candidate.value_at(i)
            if vi:
                w = left.get(j, _ZERO) + c * vi
                if w:
                    left[j] = w
                else:
                    left.pop(j, None)
        target = {u: hx * v for u, v in unit.items()} if hx else {}
        if AlgElement(sig, right) != AlgElement(sig, target):
            fails_r.append((names[x], ""))
        if AlgElement(sig, left) != AlgElement(sig, target):
            fails_l.append((names[x], ""))
    report.checks.append(
        CheckResult(
            name="right invariance (id ox h)Delta = h(.)1",
            ok=not fails_r,
            failures=fails_r[:MAX_WITNESSES],
        )
    )
    report.checks.append(
        CheckResult(
            name="left invariance (h ox id)Delta = h(.)1",
            ok=not fails_l,
            failures=fails_l[:MAX_WITNESSES],
        )
    )

    herm_fails = []
    for u in range(d):
        if candidate.value_at(sig.bstar(u)) != candidate.value_at(u).conj():
            herm_fails.append((names[u], ""))
    report.checks.append(
        CheckResult(name="hermiticity h(x^*) = conj(h(x))", ok=not herm_fails, failures=herm_fails[:MAX_WITNESSES])
    )

    # numeric positivity of the Gram matrix G_uv = h(u^* v)
    tol = mpmath.mpf(2) ** (-tolerance_bits)
    bits = tolerance_bits + 30
    with mpmath.workprec(bits):
        gram = mpmath.zeros(d, d)
        for u in range(d):
            su = sig.bstar(u)
            for v in range(d):
                w = sig.bmul(su, v)
                if w is None:
                    continue
                val = candidate.value_at(w)
                if val:
                    gram[u, v] = val.approx(bits)
        eigs = mpmath.eigh(gram, eigvals_only=True)
        min_eig = min(eigs) if d else mpmath.mpf(0)
    report.checks.append(
        CheckResult(
            name="positivity (numeric)",
            ok=bool(min_eig >= -tol),
            failures=[] if min_eig >= -tol else [("min Gram eigenvalue", mpmath.nstr(min_eig, 12))],
            note=f"numeric check at tolerance 2^-{tolerance_bits}; min eigenvalue {mpmath.nstr(min_eig, 8)}",
        )
    )
    return report

"""Independent brute-force Hopf axiom oracle.

Everything here is deliberately separate from the package: scalars are
small hand-rolled exact fields (Gaussian rationals for the Kac-Paljutkin
check, Q(zeta_3) for the Sekine check), elements are plain dicts over
basis indices, and the axioms are expanded directly from the structure
tables.  Used to confirm the package's verdicts by a second route.
"""

from fractions import Fraction


class GaussQ:
    """a + b*i with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, o):
        return GaussQ(self.a + o.a, self.b + o.b)

    def __neg__(self):
        return GaussQ(-self.a, -self.b)

    def __mul__(self, o):
        return GaussQ(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a)

    def __eq__(self, o):
        return self.a == o.a and self.b == o.b

    def __bool__(self):
        return bool(self.a or self.b)

    __hash__ = None


class Zeta3Q:
    """a + b*w with w^2 = -1 - w (primitive cube root of unity)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, o):
        return Zeta3Q(self.a + o.a, self.b + o.b)

    def __neg__(self):
        return Zeta3Q(-self.a, -self.b)

    def __mul__(self, o):
        # (a+bw)(c+dw) = ac + (ad+bc)w + bd(-1-w)
        return Zeta3Q(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a - self.b * o.b)

    def __eq__(self, o):
        return self.a == o.a and self.b == o.b

    def __bool__(self):
        return bool(self.a or self.b)

    __hash__ = None


def _acc(d, k, v):
    w = d.get(k)
    d[k] = v if w is None else w + v


def _nonzero(d):
    return {k: v for k, v in d.items() if v}


def check_axioms(dim, mult, delta, counit, antipode, unit, zero):
    """Expand coassociativity, counit, antipode and Delta-multiplicativity
    directly; returns a dict of booleans.

    mult[(u,v)] -> target index or None; delta[u] -> {(i,j): scalar};
    counit[u] -> scalar; antipode[u] -> index; unit -> {u: scalar}.
    """
    results = {}

    ok = True
    for x in range(dim):
        lhs, rhs = {}, {}
        for (i, j), c in delta[x].items():
            for (a, b), e in delta[i].items():
                _acc(lhs, (a, b, j), c * e)
            for (a, b), e in delta[j].items():
                _acc(rhs, (i, a, b), c * e)
        if _nonzero(lhs) != _nonzero(rhs):
            ok = False
            break
    results["coassociativity"] = ok

    ok = True
    one = type(zero)(1)
    for x in range(dim):
        left, right = {}, {}
        for (i, j), c in delta[x].items():
            if counit[i]:
                _acc(left, j, counit[i] * c)
            if counit[j]:
                _acc(right, i, counit[j] * c)
        if _nonzero(left) != {x: one} or _nonzero(right) != {x: one}:
            ok = False
            break
    results["counit"] = ok

    ok = True
    for x in range(dim):
        left, right = {}, {}
        for (i, j), c in delta[x].items():
            t = mult.get((antipode[i], j))
            if t is not None:
                _acc(left, t, c)
            t = mult.get((i, antipode[j]))
            if t is not None:
                _acc(right, t, c)
        target = {}
        if counit[x]:
            for u, cu in unit.items():
                _acc(target, u, counit[x] * cu)
        if _nonzero(left) != _nonzero(target) or _nonzero(right) != _nonzero(target):
            ok = False
            break
    results["antipode"] = ok

    ok = True
    for u in range(dim):
        for v in range(dim):
            prod = {}
            for (i1, j1), c1 in delta[u].items():
                for (i2, j2), c2 in delta[v].items():
                    ti = mult.get((i1, i2))
                    tj = mult.get((j1, j2))
                    if ti is not None and tj is not None:
                        _acc(prod, (ti, tj), c1 * c2)
            t = mult.get((u, v))
            target = delta[t] if t is not None else {}
            if _nonzero(prod) != _nonzero(target):
                ok = False
                break
        if not ok:
            break
    results["delta multiplicative"] = ok

    return results


def kp_tables():
    """The Kac-Paljutkin structure tables over GaussQ, entered afresh."""
    E1, E2, E3, E4, A11, A12, A21, A22 = range(8)
    one = GaussQ(1)
    half = GaussQ(Fraction(1, 2))
    i = GaussQ(0, 1)
    ih = GaussQ(0, Fraction(1, 2))

    mult = {}
    for u in (E1, E2, E3, E4):
        mult[(u, u)] = u
    mat = {(A11, A11): A11, (A11, A12): A12, (A12, A21): A11, (A12, A22): A12,
           (A21, A11): A21, (A21, A12): A22, (A22, A21): A21, (A22, A22): A22}
    mult.update(mat)

    delta = [
        {(E1, E1): one, (E2, E2): one, (E3, E3): one, (E4, E4): one,
         (A11, A11): half, (A12, A12): half, (A21, A21): half, (A22, A22): half},
        {(E1, E2): one, (E2, E1): one, (E3, E4): one, (E4, E3): one,
         (A11, A22): half, (A22, A11): half, (A12, A21): -ih, (A21, A12): ih},
        {(E1, E3): one, (E3, E1): one, (E2, E4): one, (E4, E2): one,
         (A11, A22): half, (A22, A11): half, (A12, A21): ih, (A21, A12): -ih},
        {(E1, E4): one, (E4, E1): one, (E2, E3): one, (E3, E2): one,
         (A11, A11): half, (A22, A22): half, (A12, A12): -half, (A21, A21): -half},
        {(E1, A11): one, (A11, E1): one, (E2, A22): one, (A22, E2): one,
         (E3, A22): one, (A22, E3): one, (E4, A11): one, (A11, E4): one},
        {(E1, A12): one, (A12, E1): one, (E2, A21): i, (A21, E2): -i,
         (E3, A21): -i, (A21, E3): i, (E4, A12): -one, (A12, E4): -one},
        {(E1, A21): one, (A21, E1): one, (E2, A12): -i, (A12, E2): i,
         (E3, A12): i, (A12, E3): -i, (E4, A21): -one, (A21, E4): -one},
        {(E1, A22): one, (A22, E1): one, (E2, A11): one, (A11, E2): one,
         (E3, A11): one, (A11, E3): one, (E4, A22): one, (A22, E4): one},
    ]
    counit = [one, GaussQ(), GaussQ(), GaussQ(), GaussQ(), GaussQ(), GaussQ(), GaussQ()]
    antipode = [E1, E2, E3, E4, A11, A21, A12, A22]
    unit = {E1: one, E2: one, E3: one, E4: one, A11: one, A22: one}
    return 8, mult, delta, counit, antipode, unit, GaussQ()


def sekine3_tables():
    """Sekine tables for k = 3 over Zeta3Q, with the corrected second leg."""
    k = 3
    kk = k * k
    one = Zeta3Q(1)
    third = Zeta3Q(Fraction(1, 3))
    eta = [Zeta3Q(1), Zeta3Q(0, 1), Zeta3Q(-1, -1)]  # 1, w, w^2 = -1-w

    def d(i, j):
        return (i % k) * k + (j % k)

    def e(i, j):
        return kk + (i % k) * k + (j % k)

    mult = {}
    for u in range(kk):
        mult[(u, u)] = u
    for a in range(k):
        for b in range(k):
            for c in range(k):
                mult[(e(a, b), e(b, c))] = e(a, c)

    delta = []
    for i in range(k):
        for j in range(k):
            row = {}
            for m in range(k):
                for n in range(k):
                    row[(d(m, n), d(i - m, j - n))] = one
                    _acc(row, (e(m, n), e(m + j, n + j)), eta[(i * (m - n)) % k] * third)
            delta.append(row)
    for i in range(k):
        for j in range(k):
            row = {}
            for m in range(k):
                for n in range(k):
                    _acc(row, (d(-m, -n), e(i - n, j - n)), eta[(m * (i - j)) % k])
                    _acc(row, (e(i - n, j - n), d(m, n)), eta[(m * (j - i)) % k])
            delta.append(row)
    counit = [one if u == 0 else Zeta3Q() for u in range(kk)] + [Zeta3Q()] * kk
    antipode = [d(-i, -j) for i in range(k) for j in range(k)]
    antipode += [e(j, i) for i in range(k) for j in range(k)]
    unit = {d(i, j): one for i in range(k) for j in range(k)} | {e(r, r): one for r in range(k)}
    # d-block units also multiply as orthogonal idempotents across d/e blocks: absent keys = 0
    return 2 * kk, mult, delta, counit, antipode, unit, Zeta3Q()

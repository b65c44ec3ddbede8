"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A number is stored as a finite sum  sum_e c_e * zeta_n^e  with rational
coefficients (gmpy2.mpq) and a fixed conductor n.  The support is kept in
*canonical form*: writing n = q_1 ... q_r as a product of prime powers
q = p^a, the exponent e is canonical when each CRT component
f = e * (n/q)^{-1} mod q has leading base-p digit < p-1.  The canonical
exponents form the tensor-product integral basis of Q(zeta_n), so equality
to zero of the stored dictionary is equivalent to the number being zero.

Arithmetic between different conductors promotes both operands to the lcm.
Nothing in the decision path ever touches floating point; ``approx`` is the
only bridge to complex approximations and exists for positivity checks and
display.
"""

from __future__ import annotations

import functools
import itertools
import math
import re
from fractions import Fraction

import mpmath
from gmpy2 import mpq

__all__ = ["CycNum", "root_of_unity", "rational", "zero", "one"]

_Q0 = mpq(0)
_Q1 = mpq(1)


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            a = 0
            while n % d == 0:
                n //= d
                a += 1
            out.append((d, a))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


class _Conductor:
    """Precomputed reduction data for one conductor."""

    __slots__ = ("n", "rewrite", "units")

    def __init__(self, n: int):
        self.n = n
        comps = [(p, p**a) for p, a in _factorize(n)]
        mods = [n // q for _, q in comps]
        invs = [pow(m % q, -1, q) for (_, q), m in zip(comps, mods)]
        rewrite: list[tuple[tuple[int, int], ...] | None] = []
        for e in range(n):
            fs = [(e * inv) % q for (_, q), inv in zip(comps, invs)]
            per_comp: list[list[tuple[int, int]]] = []
            noncanon = False
            for (p, q), f in zip(comps, fs):
                step = q // p
                if f < q - step:  # leading digit < p-1
                    per_comp.append([(f, 1)])
                else:
                    noncanon = True
                    r = f - (p - 1) * step
                    per_comp.append([(r + t * step, -1) for t in range(p - 1)])
            if not noncanon:
                rewrite.append(None)
                continue
            terms = []
            for combo in itertools.product(*per_comp):
                exp = sum(g * m for (g, _), m in zip(combo, mods)) % n
                sign = 1
                for _, s in combo:
                    sign *= s
                terms.append((exp, sign))
            rewrite.append(tuple(terms))
        self.rewrite = rewrite
        self.units = [j for j in range(1, n) if math.gcd(j, n) == 1]


@functools.lru_cache(maxsize=None)
def _conductor(n: int) -> _Conductor:
    return _Conductor(n)


def _canon(n: int, raw: dict[int, mpq]) -> dict[int, mpq]:
    """Reduce arbitrary exponents mod the cyclotomic relations; drop zeros."""
    rew = _conductor(n).rewrite
    out: dict[int, mpq] = {}
    for e, v in raw.items():
        e %= n
        terms = rew[e]
        if terms is None:
            out[e] = out.get(e, _Q0) + v
        else:
            for e2, s in terms:
                out[e2] = out.get(e2, _Q0) + (v if s > 0 else -v)
    return {e: v for e, v in out.items() if v != 0}


def _to_mpq(x) -> mpq:
    if isinstance(x, (int, Fraction)) or type(x) is type(_Q0):
        return mpq(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


class CycNum:
    """An element of Q(zeta_n), immutable."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs: dict):
        if n < 1:
            raise ValueError("conductor must be a positive integer")
        self.n = n
        self.c = _canon(n, {int(e): _to_mpq(v) for e, v in coeffs.items()})

    @classmethod
    def _raw(cls, n: int, canon: dict[int, mpq]) -> "CycNum":
        """Trusted constructor: ``canon`` must already be canonical."""
        self = object.__new__(cls)
        self.n = n
        self.c = canon
        return self

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def is_rational(self) -> bool:
        return not self.c or set(self.c) == {0}

    def rational_value(self) -> mpq:
        if not self.c:
            return _Q0
        if set(self.c) != {0}:
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __bool__(self) -> bool:
        return bool(self.c)

    # -- coercion / promotion --------------------------------------------

    @classmethod
    def _coerce(cls, x) -> "CycNum":
        if isinstance(x, CycNum):
            return x
        q = _to_mpq(x)
        return cls._raw(1, {0: q} if q != 0 else {})

    def promoted(self, m: int) -> "CycNum":
        """This number viewed in the larger field Q(zeta_m); self.n must divide m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"{self.n} does not divide {m}")
        k = m // self.n
        return CycNum._raw(m, _canon(m, {e * k: v for e, v in self.c.items()}))

    @staticmethod
    def _common(a: "CycNum", b: "CycNum") -> tuple["CycNum", "CycNum"]:
        if a.n == b.n:
            return a, b
        m = math.lcm(a.n, b.n)
        return a.promoted(m), b.promoted(m)

    def lowered(self) -> "CycNum":
        """Best-effort descent to the smallest conductor visible in the support."""
        if not self.c:
            return CycNum._raw(1, {})
        n = self.n
        for d in sorted(_divisors(n)):
            step = n // d
            if all(e % step == 0 for e in self.c):
                if d == n:
                    return self
                return CycNum._raw(d, _canon(d, {e // step: v for e, v in self.c.items()}))
        return self

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "CycNum":
        other = CycNum._coerce(other)
        a, b = CycNum._common(self, other)
        out = dict(a.c)
        for e, v in b.c.items():
            w = out.get(e, _Q0) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        return CycNum._raw(a.n, out)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum._raw(self.n, {e: -v for e, v in self.c.items()})

    def __sub__(self, other) -> "CycNum":
        return self + (-CycNum._coerce(other))

    def __rsub__(self, other) -> "CycNum":
        return (-self) + other

    def __mul__(self, other) -> "CycNum":
        other = CycNum._coerce(other)
        a, b = CycNum._common(self, other)
        n = a.n
        rew = _conductor(n).rewrite
        out: dict[int, mpq] = {}
        for e1, v1 in a.c.items():
            for e2, v2 in b.c.items():
                v = v1 * v2
                e = e1 + e2
                if e >= n:
                    e -= n
                terms = rew[e]
                if terms is None:
                    out[e] = out.get(e, _Q0) + v
                else:
                    for e3, s in terms:
                        out[e3] = out.get(e3, _Q0) + (v if s > 0 else -v)
        return CycNum._raw(n, {e: v for e, v in out.items() if v != 0})

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self.c:
            raise ZeroDivisionError("division by zero in Q(zeta_n)")
        if self.is_rational():
            return CycNum._raw(self.n, {0: 1 / self.c[0]})
        prod = CycNum._raw(self.n, {0: _Q1})
        for j in _conductor(self.n).units:
            if j == 1:
                continue
            prod = prod * self.galois(j)
        norm = (prod * self).rational_value()
        return prod * CycNum._raw(1, {0: 1 / norm})

    def __truediv__(self, other) -> "CycNum":
        return self * CycNum._coerce(other).inverse()

    def __rtruediv__(self, other) -> "CycNum":
        return CycNum._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum._raw(1, {0: _Q1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, j: int) -> "CycNum":
        """Apply the Galois automorphism zeta_n -> zeta_n^j (gcd(j, n) = 1)."""
        if math.gcd(j, self.n) != 1:
            raise ValueError(f"{j} is not a unit mod {self.n}")
        return CycNum._raw(self.n, _canon(self.n, {(e * j) % self.n: v for e, v in self.c.items()}))

    def conj(self) -> "CycNum":
        """Complex conjugation: zeta_n^e -> zeta_n^{n-e}."""
        if self.n <= 2:
            return self
        return self.galois(self.n - 1)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, (CycNum, int, Fraction)) and type(other) is not type(_Q0):
            return NotImplemented
        a, b = CycNum._common(self, CycNum._coerce(other))
        return a.c == b.c

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None  # mutable-dict payload; equality crosses conductors

    # -- numeric embedding ---------------------------------------------------

    def approx(self, bits: int = 53):
        """Complex approximation under zeta_n -> exp(2*pi*i/n).

        Returns an mpmath.mpc whose absolute error is below 2**-bits.
        """
        if not self.c:
            return mpmath.mpc(0)
        mass = sum(abs(v) for v in self.c.values())
        mass_bits = max(0, int(mass.numerator).bit_length() - int(mass.denominator).bit_length() + 1)
        guard = 16 + len(self.c).bit_length() + mass_bits
        with mpmath.workprec(bits + guard):
            tot = mpmath.mpc(0)
            for e, v in sorted(self.c.items()):
                coeff = mpmath.mpf(int(v.numerator)) / mpmath.mpf(int(v.denominator))
                tot += coeff * mpmath.expjpi(mpmath.mpf(2 * e) / self.n)
            return +tot

    # -- square roots ----------------------------------------------------------

    def sqrt(self) -> "CycNum":
        """One exact square root, when self is rational * (root of unity).

        Covers every constraint the R-matrix solver produces (values such as
        1, -1, zeta_4, 2).  Raises ValueError for anything outside that shape;
        callers treat this as an unsupported-constraint condition, never as a
        wrong answer.
        """
        if not self.c:
            return CycNum._raw(1, {})
        if self.is_rational():
            return _sqrt_rational(self.c[0])
        m = 2 * self.n
        x = self.promoted(m)
        for e in range(m):
            t = x * CycNum._raw(m, _canon(m, {(m - e) % m: _Q1}))
            if t.is_rational():
                root = _sqrt_rational(t.rational_value()) * root_of_unity(2 * m, e)
                return root.lowered()
        raise ValueError(f"{self} is not rational * root-of-unity; no closed-form sqrt")

    # -- printing / parsing ------------------------------------------------------

    def literal(self) -> str:
        """Render in the textual scalar format, e.g. ``1/2*z8^3 - 1/4``."""
        if not self.c:
            return "0"
        parts = []
        for e, v in sorted(self.c.items()):
            neg = v < 0
            av = -v if neg else v
            if e == 0:
                body = _q_str(av)
            elif av == 1:
                body = f"z{self.n}^{e}"
            else:
                body = f"{_q_str(av)}*z{self.n}^{e}"
            parts.append((neg, body))
        neg0, body0 = parts[0]
        text = ("-" if neg0 else "") + body0
        for neg, body in parts[1:]:
            text += (" - " if neg else " + ") + body
        return text

    _TERM = re.compile(
        r"([+-]?)((?:\d+(?:/\d+)?\*)?z\d+(?:\^-?\d+)?|\d+(?:/\d+)?)"
    )

    @classmethod
    def parse(cls, text: str) -> "CycNum":
        """Inverse of :meth:`literal`; whitespace insignificant."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ValueError("empty scalar literal")
        pos = 0
        total = cls._raw(1, {})
        for m in cls._TERM.finditer(s):
            if m.start() != pos:
                raise ValueError(f"bad scalar literal near {s[pos:]!r}")
            pos = m.end()
            sign, body = m.group(1), m.group(2)
            if "z" in body:
                coeff_s, _, zpart = body.rpartition("*") if "*" in body else ("1", "", body)
                zbody = zpart[1:]
                if "^" in zbody:
                    n_s, e_s = zbody.split("^")
                else:
                    n_s, e_s = zbody, "1"
                term = cls(int(n_s), {int(e_s): mpq(coeff_s)})
            else:
                term = cls._raw(1, {0: mpq(body)} if mpq(body) != 0 else {})
            total = total + (-term if sign == "-" else term)
        if pos != len(s):
            raise ValueError(f"bad scalar literal near {s[pos:]!r}")
        return total

    def __repr__(self) -> str:
        return f"CycNum({self.literal()!r})"

    def __str__(self) -> str:
        return self.literal()


def _q_str(q: mpq) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, a in _factorize(n):
        out = [d * p**i for d in out for i in range(a + 1)]
    return out


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@functools.lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CycNum:
    """Exact sqrt(p) for prime p, via quadratic Gauss sums."""
    if p == 2:
        return CycNum(8, {1: 1, 7: 1})
    g = CycNum(p, {a: _legendre(a, p) for a in range(1, p)})
    if p % 4 == 1:
        return g
    # Gauss sum equals i*sqrt(p) for p = 3 mod 4
    return (root_of_unity(4, 3) * g).lowered()


def _sqrt_rational(q: mpq) -> CycNum:
    if q == 0:
        return CycNum._raw(1, {})
    if q < 0:
        return root_of_unity(4, 1) * _sqrt_rational(-q)
    num, den = int(q.numerator), int(q.denominator)
    w = num * den
    s, t = 1, 1
    for p, a in _factorize(w):
        s *= p ** (a // 2)
        if a % 2:
            t *= p
    root = CycNum(1, {0: mpq(s, den)})
    for p, _ in _factorize(t):
        root = root * _sqrt_prime(p)
    return root


def root_of_unity(n: int, e: int = 1) -> CycNum:
    """zeta_n^e in canonical form."""
    if n < 1:
        raise ValueError("root-of-unity order must be >= 1")
    return CycNum(n, {e % n: 1})


def rational(x) -> CycNum:
    """A rational number as a conductor-1 CycNum."""
    return CycNum._coerce(x)


def zero() -> CycNum:
    return CycNum._raw(1, {})


def one() -> CycNum:
    return CycNum._raw(1, {0: _Q1})

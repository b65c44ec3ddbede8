"""Exact cyclotomic arithmetic: canonical form, field axioms, literals."""

import math
import random

import mpmath
import pytest
from gmpy2 import mpq

from fqg.cyclotomic import CycNum, one, rational, root_of_unity, zero


def rand_cyc(rng, n, terms=3, denom=8):
    c = {rng.randrange(n): mpq(rng.randint(-9, 9), rng.randint(1, denom)) for _ in range(terms)}
    return CycNum(n, c)


def test_root_of_unity_defining_properties():
    i = root_of_unity(4, 1)
    assert i * i == -1
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(8, 1) ** 2 == root_of_unity(4, 1)
    assert root_of_unity(8, 1) ** 8 == 1


def test_invalid_order_rejected():
    with pytest.raises(ValueError):
        root_of_unity(0, 1)


def test_minimal_polynomial_of_zeta3():
    z = root_of_unity(3)
    assert z + z**2 + 1 == 0


def test_division_and_inverse():
    z8 = root_of_unity(8)
    assert 1 / z8 == z8**7
    a = CycNum(12, {1: mpq(2, 3), 5: 1, 0: mpq(-1, 7)})
    assert (a / a) == 1
    with pytest.raises(ZeroDivisionError):
        one() / zero()


def test_conjugation_is_ring_involution():
    i = root_of_unity(4)
    assert i.conj() == -i
    assert rational(mpq(3, 2)).conj() == mpq(3, 2)
    assert root_of_unity(8).conj() == root_of_unity(8) ** 7
    rng = random.Random(7)
    for _ in range(25):
        n = rng.choice([3, 4, 5, 8, 12])
        a, b = rand_cyc(rng, n), rand_cyc(rng, n)
        assert (a * b).conj() == a.conj() * b.conj()
        assert a.conj().conj() == a


def test_field_axioms_randomized():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.choice([3, 4, 6, 8, 9, 12])
        a, b, c = (rand_cyc(rng, n) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        if not b.is_zero():
            assert (a / b) * b == a


def test_promotion_coherence():
    rng = random.Random(13)
    for _ in range(20):
        a = rand_cyc(rng, rng.choice([3, 4, 9]))
        b = rand_cyc(rng, rng.choice([4, 8, 6]))
        m = math.lcm(a.n, b.n)
        direct = a + b
        pre = a.promoted(m) + b.promoted(m)
        assert direct == pre
        assert (a * b) == a.promoted(m) * b.promoted(m)


def test_zero_coefficients_never_stored():
    x = CycNum(5, {0: 1, 1: 0, 2: mpq(0)})
    assert set(x.c) == {0}
    y = root_of_unity(3) + root_of_unity(3, 2) + 1
    assert y.c == {}


def test_embedding_of_zeta4_and_rationals():
    v = root_of_unity(4).approx(53)
    assert abs(v - mpmath.mpc(0, 1)) < 2**-53
    assert abs(rational(mpq(1, 8)).approx(53) - mpmath.mpf("0.125")) == 0


def test_embedding_matches_independent_cosine():
    # independent oracle: 2*cos(pi/4) at high precision straight from mpmath
    x = root_of_unity(8) + root_of_unity(8, 7)
    with mpmath.workprec(120):
        expected = 2 * mpmath.cos(mpmath.pi / 4)
        got = x.approx(100)
        assert abs(got - expected) < mpmath.mpf(2) ** -100


def test_galois_conjugates_fix_rationals():
    a = rational(mpq(22, 7))
    assert a.galois(1) == a
    b = root_of_unity(5)
    assert b.galois(2) == root_of_unity(5, 2)


def test_literal_round_trip():
    samples = [
        zero(),
        one(),
        rational(mpq(-3, 4)),
        root_of_unity(8, 3) * mpq(1, 2) - mpq(1, 4),
        CycNum(12, {0: mpq(5, 6), 7: -2, 1: mpq(1, 3)}),
        -root_of_unity(7, 3),
    ]
    for x in samples:
        s = x.literal()
        y = CycNum.parse(s)
        assert y == x
        assert y.literal() == s  # printing is canonical


def test_literal_examples():
    x = CycNum.parse("1/2*z8^3 - 1/4")
    assert x == root_of_unity(8, 3) * mpq(1, 2) - mpq(1, 4)
    assert CycNum.parse(" 1/2 * z8^3-1/4 ") == x
    assert CycNum.parse("0") == zero()
    with pytest.raises(ValueError):
        CycNum.parse("1/2*w8")
    with pytest.raises(ValueError):
        CycNum.parse("")


def test_lowered_descends_conductor():
    x = root_of_unity(8, 2)  # equals zeta_4
    assert x.lowered().n == 4
    y = root_of_unity(8) * root_of_unity(8, 7)  # equals 1
    assert y.lowered().n == 1


def test_sqrt_of_roots_of_unity_and_rationals():
    i = root_of_unity(4)
    for target in [one(), -one(), i, -i, rational(2), rational(-2), rational(mpq(9, 4))]:
        r = target.sqrt()
        assert r * r == target
    lam = i.sqrt()
    assert lam * lam == i  # lambda with lambda^2 = sqrt(-1)
    assert rational(2).sqrt() == root_of_unity(8) + root_of_unity(8, 7)
    with pytest.raises(ValueError):
        (one() + root_of_unity(5)).sqrt()


def test_sqrt_via_gauss_sums_squares_back():
    for p in [3, 5, 7, 11, 13]:
        r = rational(p).sqrt()
        assert r * r == p

"""Exact linear algebra: rref canonicality, membership, kernels, Grassmann identity."""

import random

from gmpy2 import mpq

import pytest

from fqg.cyclotomic import CycNum, root_of_unity
from fqg.errors import DimensionError
from fqg.linalg import (
    ExactMatrix,
    intersect,
    member,
    rref,
    solve_linear,
    span,
    sum_subspaces,
)


def bareiss_rank(rows):
    """Independent fraction-free Gaussian elimination oracle (rank only)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(nr):
            if r == rank:
                continue
            for c in range(nc):
                if c == col:
                    continue
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev
            m[r][col] = CycNum._coerce(0)
        prev = m[rank][col]
        rank += 1
    return rank


def rand_matrix(rng, rows, cols):
    return [
        [CycNum._coerce(mpq(rng.randint(-5, 5), rng.randint(1, 4))) for _ in range(cols)]
        for _ in range(rows)
    ]


def test_rref_identity_fixed():
    m = ExactMatrix.identity(3)
    assert rref(m) == m


def test_rref_collapses_dependent_rows():
    m = ExactMatrix([[1, 1], [2, 2]])
    r = rref(m)
    assert r.rows == 1
    assert r.data[0][0] == 1 and r.data[0][1] == 1


def test_rref_rank_matches_bareiss_oracle():
    rng = random.Random(3)
    for _ in range(6):
        rows = rand_matrix(rng, 5, 8)
        assert ExactMatrix(rows).rank() == bareiss_rank(rows)


def test_rref_idempotent():
    rng = random.Random(5)
    m = ExactMatrix(rand_matrix(rng, 6, 5))
    r = rref(m)
    assert rref(r) == r


def test_span_canonical_under_permutation_and_scaling():
    rng = random.Random(9)
    vecs = rand_matrix(rng, 4, 7)
    s1 = span(7, vecs)
    shuffled = [[x * 3 for x in v] for v in reversed(vecs)]
    s2 = span(7, shuffled)
    assert s1 == s2


def test_span_edge_cases():
    assert span(8, []).dim == 0
    v = [1, 0, 2, 0, 0, 0, 0, 0]
    s = span(8, [v, [2 * x for x in v]])
    assert s.dim == 1
    with pytest.raises(DimensionError):
        span(3, [[1, 2]])


def test_member_kp_style_vectors():
    # ambient basis order: e1..e4, a11, a12, a21, a22
    gen1 = [1, 1, 1, 1, 0, 0, 0, 0]
    gen2 = [0, 0, 0, 0, 1, 0, 0, 1]
    s = span(8, [gen1, gen2])
    assert s.dim == 2
    assert member(s, gen1)
    # brute-force 2-unknown oracle: no (x, y) has x*gen1 + y*gen2 = e1
    assert not member(s, [1, 0, 0, 0, 0, 0, 0, 0])
    assert member(span(8, []), [0] * 8)


def test_solve_identity_and_degenerate():
    sol = solve_linear(ExactMatrix.identity(3), [1, 2, 3])
    assert sol is not None
    x, null = sol
    assert [v for v in x] == [1, 2, 3] and null.dim == 0
    sol = solve_linear(ExactMatrix([[0, 0], [0, 0]]), [0, 0])
    x, null = sol
    assert all(v.is_zero() for v in x) and null.dim == 2
    assert solve_linear(ExactMatrix([[1, 1], [1, 1]]), [0, 1]) is None


def test_solve_with_cyclotomic_entries():
    i = root_of_unity(4)
    a = ExactMatrix([[i, 1], [1, i]])
    sol = solve_linear(a, [1, 0])
    assert sol is not None
    x, null = sol
    assert a.data[0][0] * x[0] + a.data[0][1] * x[1] == 1
    assert a.data[1][0] * x[0] + a.data[1][1] * x[1] == 0
    assert null.dim == 0


def test_intersect_and_sum_basics():
    rng = random.Random(21)
    s = span(6, rand_matrix(rng, 3, 6))
    assert intersect(s, s) == s
    zero_s = span(6, [])
    assert sum_subspaces(s, zero_s) == s


def test_grassmann_dimension_identity():
    rng = random.Random(33)
    for _ in range(8):
        s1 = span(7, rand_matrix(rng, rng.randint(1, 4), 7))
        s2 = span(7, rand_matrix(rng, rng.randint(1, 4), 7))
        lhs = s1.dim + s2.dim
        rhs = sum_subspaces(s1, s2).dim + intersect(s1, s2).dim
        assert lhs == rhs


def test_intersection_members_lie_in_both():
    rng = random.Random(41)
    s1 = span(6, rand_matrix(rng, 4, 6))
    s2 = span(6, rand_matrix(rng, 4, 6))
    inter = intersect(s1, s2)
    for row in inter.rows:
        assert s1.contains(row) and s2.contains(row)


def test_subspace_inclusion_operators():
    a = span(4, [[1, 0, 0, 0]])
    b = span(4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert a <= b and a < b and not (b <= a)

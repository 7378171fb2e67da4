"""Exact linear algebra: determinants, HNF, LLL, solvers."""

import random
from fractions import Fraction

import pytest

from unimodular.linalg import (
    det_bareiss,
    det_frac,
    gauss_solve,
    gram_minors,
    hnf_rows,
    hnf_rows_frac,
    identity,
    integral_gso,
    is_integer_matrix,
    lll_reduce_gram,
    mat_inverse,
    matmul,
    matvec,
    parity_kernel_basis,
    primitive_part,
    transpose,
)


def _det_cofactor(m):
    """Independent O(n!) determinant for small matrices."""
    n = len(m)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * Fraction(m[0][j]) * _det_cofactor(minor)
    return total


def _random_int_matrix(rng, n, lo=-6, hi=7):
    return [[rng.randrange(lo, hi) for _ in range(n)] for _ in range(n)]


def _random_unimodular(rng, n, steps=12):
    """Product of elementary row operations: determinant +-1 by construction."""
    u = identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        q = rng.choice((-2, -1, 1, 2))
        for k in range(n):
            u[i][k] += q * u[j][k]
    return u


def _random_pd_gram(rng, n):
    """a a^T + diag shift: integer, symmetric, positive definite."""
    a = _random_int_matrix(rng, n, -3, 4)
    g = matmul(a, transpose(a))
    for i in range(n):
        g[i][i] += rng.randrange(1, 4)
    return g


# ---------------------------------------------------------------------------
# determinants and solving


def test_det_bareiss_matches_cofactor_expansion():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randrange(1, 6)
        m = _random_int_matrix(rng, n)
        assert det_bareiss(m) == _det_cofactor(m)


def test_det_frac_clears_denominators():
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(3, 7)]]
    assert det_frac(m) == Fraction(1, 2) * Fraction(3, 7) - Fraction(1, 3) * Fraction(1, 5)
    assert det_frac([]) == 1


def test_det_multiplicative_under_unimodular():
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randrange(2, 6)
        m = _random_int_matrix(rng, n)
        u = _random_unimodular(rng, n)
        assert abs(det_bareiss(u)) == 1
        assert det_bareiss(matmul(u, m)) == det_bareiss(u) * det_bareiss(m)


def test_gauss_solve_vector_and_matrix():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randrange(1, 6)
        a = _random_int_matrix(rng, n)
        if det_bareiss(a) == 0:
            continue
        x = [Fraction(rng.randrange(-5, 6), rng.randrange(1, 4)) for _ in range(n)]
        b = matvec(a, x)
        assert gauss_solve(a, b) == x
    with pytest.raises(ValueError):
        gauss_solve([[1, 2], [2, 4]], [1, 1])


def test_mat_inverse_round_trip():
    rng = random.Random(4)
    for _ in range(15):
        n = rng.randrange(1, 5)
        a = _random_int_matrix(rng, n)
        if det_bareiss(a) == 0:
            continue
        inv = mat_inverse(a)
        assert matmul(a, inv) == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# Gram-matrix tools


def test_gram_minors_positive_definite_gate():
    rng = random.Random(5)
    g = _random_pd_gram(rng, 4)
    mins = gram_minors(g)
    assert all(d > 0 for d in mins)
    assert mins[-1] == det_bareiss(g)
    with pytest.raises(ValueError):
        gram_minors([[1, 2], [2, 1]])  # det -3


def test_integral_gso_consistency():
    rng = random.Random(6)
    for _ in range(12):
        n = rng.randrange(2, 6)
        g = _random_pd_gram(rng, n)
        d, lam = integral_gso(g)
        assert d == gram_minors(g)
        # lam[i][j] = d[j] * mu_ij; recompute mu from a rational GSO
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [Fraction(0)] * n
        for i in range(n):
            bstar[i] = Fraction(g[i][i])
            for j in range(i):
                s = g[i][j] - sum(mu[i][k] * mu[j][k] * bstar[k] for k in range(j))
                mu[i][j] = s / bstar[j]
                bstar[i] -= mu[i][j] ** 2 * bstar[j]
        for i in range(n):
            for j in range(i):
                assert lam[i][j] == d[j] * mu[i][j]


def test_lll_reduce_gram_invariants():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randrange(2, 6)
        g0 = _random_pd_gram(rng, n)
        # shear by a random unimodular matrix to hide the short basis
        u0 = _random_unimodular(rng, n)
        g = matmul(matmul(u0, g0), transpose(u0))
        g_red, u = lll_reduce_gram(g)
        assert abs(det_bareiss(u)) == 1
        assert matmul(matmul(u, [[Fraction(x) for x in r] for r in g]), transpose(u)) == g_red
        assert det_frac(g_red) == det_frac(g)
        # reduction never increases the smallest diagonal entry
        assert min(r[i] for i, r in enumerate(g_red)) <= min(r[i] for i, r in enumerate(g))


# ---------------------------------------------------------------------------
# Hermite normal form


def test_hnf_rows_canonical_under_row_mixing():
    rng = random.Random(8)
    for _ in range(20):
        n = rng.randrange(2, 5)
        rows = [[rng.randrange(-8, 9) for _ in range(n + 1)] for _ in range(n)]
        h1 = hnf_rows(rows)
        u = _random_unimodular(rng, n)
        h2 = hnf_rows(matmul(u, rows))
        assert h1 == h2  # same row span -> same canonical form


def test_hnf_rows_shape():
    h = hnf_rows([[2, 4, 0], [0, 0, 3], [2, 4, 3]])
    assert h == [[2, 4, 0], [0, 0, 3]]
    assert hnf_rows([[0, 0], [0, 0]]) == []
    assert hnf_rows([]) == []
    # pivots positive, entries above a pivot reduced mod the pivot
    h = hnf_rows([[-3, 1], [0, 5]])
    assert h[0][0] > 0 and 0 <= h[0][1] < h[1][1]


def test_hnf_rows_frac_scales_back():
    rows = [[Fraction(1, 2), Fraction(1, 2)], [Fraction(0), Fraction(1)]]
    h = hnf_rows_frac(rows)
    assert h == [[Fraction(1, 2), Fraction(1, 2)], [Fraction(0), Fraction(1)]]
    # span membership: (1/2, 3/2) = row0 + row1
    assert len(hnf_rows_frac(rows + [[Fraction(1, 2), Fraction(3, 2)]])) == 2


def test_parity_kernel_basis_index():
    rng = random.Random(9)
    for _ in range(15):
        n = rng.randrange(1, 7)
        parity = [rng.randrange(2) for _ in range(n)]
        basis = parity_kernel_basis(parity, n)
        assert len(basis) == n
        d = abs(det_bareiss(basis))
        assert d == (2 if any(parity) else 1)
        for row in basis:
            assert sum(p * x for p, x in zip(parity, row)) % 2 == 0


def test_primitive_part():
    assert primitive_part([4, -6, 8]) == [2, -3, 4]
    assert primitive_part([0, 0]) == [0, 0]
    assert primitive_part([3, 5]) == [3, 5]


def test_is_integer_matrix():
    assert is_integer_matrix([[1, Fraction(4, 2)], [0, -3]])
    assert not is_integer_matrix([[Fraction(1, 2)]])

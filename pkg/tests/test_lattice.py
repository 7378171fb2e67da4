"""Lattice enumeration against brute-force boxes and classical counts."""

import itertools
import math
import random
from fractions import Fraction

import pytest

from unimodular.lattice import (
    Coset,
    Lattice,
    check_unimodular,
    dual,
    enumerate_short,
    even_sublattice,
    find_any,
    lattice_from_json_dict,
    lattice_to_json_dict,
    min_norm,
    shadow_by_enumeration,
    shadow_cosets,
    theta_by_enumeration,
    verify_min_norm,
    zn,
)
from unimodular.linalg import hnf_rows_frac, mat_inverse, matmul, transpose
from unimodular.qseries import theta2


def _brute_counts(target, max_norm):
    """Complete search over an exact box: (x_i + t_i)^2 <= (G^-1)_ii * R."""
    if isinstance(target, Coset):
        base, off = target.base, target.offset
    else:
        base, off = target, [Fraction(0)] * target.dim
    g = base.gram
    n = base.dim
    ginv = mat_inverse(g)
    R = Fraction(max_norm)
    axes = []
    for i in range(n):
        w = ginv[i][i] * R
        b = math.isqrt(w.numerator // w.denominator) + 1
        center = -off[i]
        lo = math.floor(center) - b
        hi = math.ceil(center) + b
        axes.append(range(lo, hi + 1))
    counts = {}
    for x in itertools.product(*axes):
        v = [Fraction(c) + t for c, t in zip(x, off)]
        norm = sum(v[i] * g[i][j] * v[j] for i in range(n) for j in range(n))
        if norm <= R:
            counts[norm] = counts.get(norm, 0) + 1
    return counts


def _random_skewed_lattice(rng, n):
    """Diagonal gram hidden behind a few gentle integer shears."""
    diag = [rng.randrange(1, 4) for _ in range(n)]
    b = [[Fraction(diag[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for _ in range(6 if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        q = rng.choice((-1, 1))
        b[i] = [x + q * y for x, y in zip(b[i], b[j])]
    gram = matmul(b, transpose(b))
    return Lattice(gram, gens=b)


def e8_lattice():
    """Even unimodular dim-8 lattice: D8 plus the all-halves glue vector."""
    rows = []
    for i in range(7):
        r = [0] * 8
        r[i], r[i + 1] = 1, -1
        rows.append(r)
    r = [0] * 8
    r[6], r[7] = 1, 1
    rows.append(r)
    rows.append([Fraction(1, 2)] * 8)
    basis = hnf_rows_frac(rows)
    assert len(basis) == 8
    return Lattice(matmul(basis, transpose(basis)), gens=basis, name="E8")


# ---------------------------------------------------------------------------
# enumeration correctness


def test_enumeration_matches_brute_force_lattices():
    rng = random.Random(1234)
    for _ in range(12):
        n = rng.randrange(1, 4)
        L = _random_skewed_lattice(rng, n)
        R = rng.randrange(2, 7)
        assert enumerate_short(L, R) == _brute_counts(L, R)


def test_enumeration_matches_brute_force_cosets():
    rng = random.Random(977)
    for _ in range(12):
        n = rng.randrange(1, 4)
        L = _random_skewed_lattice(rng, n)
        off = [Fraction(rng.randrange(-3, 4), rng.choice((1, 2, 3))) for _ in range(n)]
        c = Coset(L, off)
        R = rng.randrange(2, 6)
        assert enumerate_short(c, R) == _brute_counts(c, R)


def test_enumeration_z3_sum_of_three_squares():
    counts = enumerate_short(zn(3), 6)
    assert [counts.get(Fraction(k), 0) for k in range(7)] == [1, 6, 12, 8, 6, 24, 24]


def test_collect_returns_matching_vectors():
    counts, vecs = enumerate_short(zn(2), 2, collect=True)
    assert sorted(vecs) == [
        (-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 0), (0, 1), (1, -1), (1, 0), (1, 1)
    ]
    assert counts[Fraction(1)] == 4 and counts[Fraction(2)] == 4
    # every counted vector is collected, with matching norms
    L = _random_skewed_lattice(random.Random(5), 3)
    counts, vecs = enumerate_short(L, 5, collect=True)
    tally = {}
    for v in vecs:
        tally[L.norm_of(v)] = tally.get(L.norm_of(v), 0) + 1
    assert tally == counts


def test_find_any_and_min_norm():
    rng = random.Random(31)
    for _ in range(8):
        L = _random_skewed_lattice(rng, 3)
        mu = min_norm(L)
        hit = find_any(L, mu)
        assert hit is not None and hit[0] == mu
        assert L.norm_of(hit[1]) == mu
        assert find_any(L, mu - Fraction(1, 4)) is None
        assert verify_min_norm(L, mu)
        assert not verify_min_norm(L, mu + 1)
        assert not verify_min_norm(L, mu - Fraction(1, 2))


def test_find_any_skips_zero_in_shifted_coset():
    c = Coset(zn(2), [Fraction(1, 2), Fraction(0)])
    norm, x = find_any(c, 3)
    assert norm == Fraction(1, 4)
    assert c.norm_of(x) == norm


# ---------------------------------------------------------------------------
# unimodular structure


def test_zn_classification_and_theta():
    L = zn(4)
    assert check_unimodular(L) == "odd"
    assert min_norm(L) == 1
    t = theta_by_enumeration(L, 3)
    # r4(m): 8 sum of divisors not divisible by 4
    assert [t.coeff(4 * m) for m in range(4)] == [1, 8, 24, 32]


def test_e8_even_unimodular():
    L = e8_lattice()
    assert check_unimodular(L) == "even"
    assert L.det() == 1
    t = theta_by_enumeration(L, 4)
    assert t.coeff(4) == 0 and t.coeff(8) == 240 and t.coeff(16) == 2160


def test_check_unimodular_rejections():
    assert check_unimodular(Lattice([[2]])).startswith("not-unimodular(det")
    assert check_unimodular(Lattice([[Fraction(1, 2)]])).startswith(
        "not-unimodular(non-integral"
    )


def test_dual_involution():
    L = _random_skewed_lattice(random.Random(8), 3)
    D = dual(L)
    assert D.gram == mat_inverse(L.gram)
    assert dual(D).gram == L.gram
    assert D.det() * L.det() == 1
    # unimodular lattices are self-dual
    assert dual(zn(5)).gram == zn(5).gram


def test_even_sublattice_index_two():
    L = zn(3)
    L0 = even_sublattice(L)
    assert L0.det() == 4
    counts = enumerate_short(L0, 4)
    assert all(k % 2 == 0 for k in counts)
    # index 2: even-norm vectors of L are exactly the vectors of L0
    full = enumerate_short(L, 4)
    assert all(counts.get(k, 0) == v for k, v in full.items() if k % 2 == 0)


def test_shadow_of_zn_is_half_integer_grid():
    for n in range(1, 6):
        s = shadow_by_enumeration(zn(n), 3)
        expect = theta2(s.trunc) ** n
        assert s.agrees_with(expect, upto=min(s.trunc, expect.trunc))


def test_shadow_cosets_structure():
    c1, c2 = shadow_cosets(zn(3))
    assert not c1.is_lattice() and not c2.is_lattice()
    # shadow norms of Z^n lie in n/4 + 2Z
    for c in (c1, c2):
        for norm, cnt in enumerate_short(c, 4).items():
            assert (norm - Fraction(3, 4)) % 2 == 0 and cnt > 0
    with pytest.raises(ValueError):
        shadow_cosets(e8_lattice())  # even lattice has no shadow


# ---------------------------------------------------------------------------
# construction guards and serialization


def test_lattice_constructor_guards():
    with pytest.raises(ValueError):
        Lattice([[1, 0]])  # not square
    with pytest.raises(ValueError):
        Lattice([[1, 2], [3, 1]])  # not symmetric
    with pytest.raises(ValueError):
        Lattice([[1, 0], [0, 1]], gens=[[1, 0]])  # generator count
    with pytest.raises(ValueError):
        Lattice([[2, 0], [0, 1]], gens=[[1, 0], [0, 1]])  # gram mismatch
    with pytest.raises(ValueError):
        Lattice([[1]], scale_sq=0)


def test_json_round_trip():
    for L in (zn(3), e8_lattice(), _random_skewed_lattice(random.Random(2), 3)):
        M = lattice_from_json_dict(lattice_to_json_dict(L))
        assert M.gram == L.gram and M.gens == L.gens and M.scale_sq == L.scale_sq


def test_json_rejects_malformed_input():
    with pytest.raises(ValueError):
        lattice_from_json_dict({"dim": 2, "gram": [["1", "0"]]})
    with pytest.raises(ValueError):
        lattice_from_json_dict({"gram": [["1"]]})

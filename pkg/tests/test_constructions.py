"""Glue doubling and shave projections, from toy cases to the frozen data."""

from fractions import Fraction

import pytest

from unimodular.bounds import fit_from_theta, shadow_theta
from unimodular.constructions import (
    GLUE_A15_T3,
    GLUE_D16_T4,
    SHAVE_30,
    SHAVE_32,
    GlueMap,
    a15_plus_fixture,
    build_shave29,
    build_shave31,
    d16_plus_fixture,
    find_glue,
    find_shave_vector,
    glue_double,
    project_shave,
)
from unimodular.lattice import (
    check_unimodular,
    enumerate_short,
    min_norm,
    shadow_by_enumeration,
    theta_by_enumeration,
    verify_min_norm,
    zn,
)


# ---------------------------------------------------------------------------
# base fixtures


def test_a15_plus_fixture():
    L = a15_plus_fixture()
    assert L.dim == 15 and L.name == "A15+"
    assert check_unimodular(L) == "odd"
    assert verify_min_norm(L, 2)
    counts = enumerate_short(L, 3)
    assert counts[Fraction(2)] == 240 and counts[Fraction(3)] == 3640


def test_d16_plus_fixture():
    L = d16_plus_fixture()
    assert L.dim == 16 and L.name == "D16+"
    assert check_unimodular(L) == "even"
    assert verify_min_norm(L, 2)
    assert enumerate_short(L, 2)[Fraction(2)] == 480


def test_a15_plus_shadow_consistency():
    # enumerated shadow vs the shadow attached to the theta fit
    L = a15_plus_fixture()
    fit = fit_from_theta(15, theta_by_enumeration(L, 3))
    s_enum = shadow_by_enumeration(L, 3)
    s_fit = shadow_theta(15, fit, s_enum.trunc)
    assert s_enum.agrees_with(s_fit, upto=min(s_enum.trunc, s_fit.trunc))


# ---------------------------------------------------------------------------
# doubling on small lattices


def test_identity_glue_for_trivial_target():
    g = find_glue(zn(4), 1)
    assert g is not None and g.images == (1, 2, 4, 8) and g.target == 1
    M = glue_double(zn(4), g)
    assert M.dim == 8 and check_unimodular(M) == "odd" and min_norm(M) == 1


def test_glue_double_of_z1():
    M = glue_double(zn(1), (1,))
    assert M.dim == 2 and check_unimodular(M) == "odd" and min_norm(M) == 1


def test_glue_double_rejects_bad_maps():
    with pytest.raises(ValueError):
        glue_double(zn(2), (1, 1))  # not a bijection mod 2
    with pytest.raises(ValueError):
        glue_double(zn(2), (3, 2))  # e0 -> e0+e1 changes the norm parity
    with pytest.raises(ValueError):
        glue_double(zn(2), (1,))  # wrong length


def test_glue_map_json():
    g = GlueMap(2, 1, (1, 2))
    assert g.to_json_dict() == {"dim": 2, "target": 1, "images": [1, 2]}


def test_find_glue_fails_on_impossible_target():
    # minimal norm 4 in dimension 30 is impossible, so no map can exist
    A = a15_plus_fixture()
    assert find_glue(A, 4, seed=1, max_steps=1200, restarts=2) is None


def test_find_glue_reproduces_frozen_map():
    assert find_glue(a15_plus_fixture(), 3, seed=0).images == GLUE_A15_T3


# ---------------------------------------------------------------------------
# the frozen 30- and 32-dimensional doublings


def test_glue30_structure(glue30):
    assert glue30.dim == 30 and glue30.name == "glue30"
    assert check_unimodular(glue30) == "odd"
    assert verify_min_norm(glue30, 3)
    assert glue30.norm_of(SHAVE_30) == 4


def test_glue32_structure(glue32):
    assert glue32.dim == 32 and glue32.name == "glue32"
    assert check_unimodular(glue32) == "even"
    assert glue32.norm_of(SHAVE_32) == 4
    # full minimal-norm verification runs in the acceptance suite


def test_frozen_d16_map_is_accepted():
    # glue_double validates the mod-2 isometry property on construction
    assert len(GLUE_D16_T4) == 16
    M = glue_double(d16_plus_fixture(), GLUE_D16_T4)
    assert M.dim == 32 and M.det() == 1


# ---------------------------------------------------------------------------
# shaving


def test_project_shave_small_cases():
    L3 = project_shave(zn(4), (1, 1, 1, 1))
    assert L3.dim == 3 and check_unimodular(L3) == "odd" and min_norm(L3) == 1
    L3 = project_shave(zn(4), (2, 0, 0, 0))
    assert L3.dim == 3 and check_unimodular(L3) == "odd" and min_norm(L3) == 1
    assert L3.name == "shave(Z4)"


def test_project_shave_guards():
    with pytest.raises(ValueError):
        project_shave(zn(4), (1, 0, 0, 0))  # norm 1
    with pytest.raises(ValueError):
        project_shave(zn(4), (1, 1, 1))  # wrong length


def test_find_shave_vector_on_z4():
    v = find_shave_vector(zn(4), 1)
    assert v is not None and zn(4).norm_of(v) == 4
    assert min_norm(project_shave(zn(4), v)) >= 1


def test_shave29_structure(glue30):
    L = project_shave(glue30, SHAVE_30)
    assert L.dim == 29
    assert check_unimodular(L) == "odd"
    assert L.det() == 1


def test_shave31_structure(glue32):
    L = project_shave(glue32, SHAVE_32)
    assert L.dim == 31
    assert check_unimodular(L) == "odd"
    assert L.det() == 1


def test_shave_builders_compose():
    L29 = build_shave29()
    assert (L29.dim, L29.name) == (29, "shave29")
    assert check_unimodular(L29) == "odd"
    L31 = build_shave31()
    assert (L31.dim, L31.name) == (31, "shave31")
    assert check_unimodular(L31) == "odd"

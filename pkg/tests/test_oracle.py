from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from rescos.arrangement import full_space
from rescos.errors import ConfigurationError, ResourceLimitError
from rescos.oracle import brute_force_flats, brute_force_points, diff_flats, lattice_flats
from rescos.residual import enumerate_residual, group_orbits
from rescos.rootsys import ParameterFunction, build_root_system, orbit

from conftest import SMALL_TYPES

ONE = ParameterFunction.equal(1)


def test_a1():
    R = build_root_system("A1")
    flats = brute_force_flats(R, ONE)
    assert {L.dim for L in flats} == {0, 1}
    assert {L.center for L in flats if L.dim == 0} == {(F(1, 2), F(-1, 2)), (F(-1, 2), F(1, 2))}
    assert brute_force_points(R, ONE) == {(F(1, 2), F(-1, 2)), (F(-1, 2), F(1, 2))}


def test_a2_counts():
    flats = brute_force_flats(build_root_system("A2"), ONE)
    assert sorted(L.dim for L in flats).count(1) == 6
    assert sorted(L.dim for L in flats).count(0) == 6


def test_b2_points():
    R = build_root_system("B2")
    assert brute_force_points(R, ONE) == frozenset(orbit(R, (F(2), F(1))))


def test_g2_point_orbits():
    R = build_root_system("G2")
    pts = brute_force_points(R, ONE)
    seen, n = set(), 0
    for p in sorted(pts):
        if p not in seen:
            seen |= orbit(R, p)
            n += 1
    assert n == 2 and seen == pts


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_zero_k(label):
    R = build_root_system(label)
    assert brute_force_flats(R, ParameterFunction.equal(0)) == {full_space(R)}


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_points_are_dim_zero_stratum(label):
    R = build_root_system(label)
    flats = brute_force_flats(R, ONE)
    assert {L.center for L in flats if L.dim == 0} == brute_force_points(R, ONE)


@settings(max_examples=25)
@given(
    label=st.sampled_from(["A2", "B2", "G2", "A1xA1", "A1xB2"]),
    vals=st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=3, max_size=3),
)
def test_differential_random_k(label, vals):
    R = build_root_system(label)
    k = ParameterFunction.of(dict(zip(R.classes, vals)))
    d = diff_flats(enumerate_residual(R, k).flats, brute_force_flats(R, k))
    assert d.identical, (d.only_left, d.only_right)


def test_lattice_truncation():
    R = build_root_system("B2")
    assert {L.codim for L in lattice_flats(R, ONE, max_codim=1)} == {0, 1}


def test_caps():
    with pytest.raises(ConfigurationError):
        brute_force_flats(build_root_system("D5"), ONE)
    with pytest.raises(ResourceLimitError):
        brute_force_flats(build_root_system("B3"), ONE, max_subsets=10)


def test_diff_reports_both_sides():
    R = build_root_system("A2")
    a = brute_force_flats(R, ONE)
    b = set(a)
    extra = b.pop()
    d = diff_flats(b, a)
    assert d.only_right == [extra] and d.only_left == [] and not d.identical


def test_oracle_grouping_matches_table():
    R = build_root_system("G2")
    flats = brute_force_flats(R, ONE)
    t = enumerate_residual(R, ONE)
    assert len(t.orbits) == 5
    assert {c.flat for c in t.cosets} == set(flats)
    assert len(group_orbits(R, t.cosets)[0]) == 5

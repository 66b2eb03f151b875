from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from rescos.arrangement import flat_from_equations
from rescos.errors import ResourceLimitError
from rescos.residual import (
    ALL_CHECKS,
    enumerate_residual,
    pair_representation,
    residual_points,
    scan_parameters,
    verify_all,
)
from rescos.rootsys import ParameterFunction, build_root_system, orbit_size

ONE = ParameterFunction.equal(1)


def table(label, **k):
    R = build_root_system(label)
    return R, enumerate_residual(R, ParameterFunction.of(k) if k else ONE)


def test_a1():
    R, t = table("A1")
    assert [(e.dim, e.orbit_size) for e in t.orbits] == [(1, 1), (0, 2)]
    assert {c.center for c in t.points} == {(F(1, 2), F(-1, 2)), (F(-1, 2), F(1, 2))}


def test_a2():
    R, t = table("A2")
    assert [e.dim for e in t.orbits] == [2, 1, 0]
    line, point = t.orbits[1], t.orbits[2]
    assert line.parabolic_type == "A1"
    assert point.orbit_size == 6
    dom = point.representative.center
    assert [sum(a * x for a, x in zip(s, dom)) for s in R.simple_roots] == [1, 1]


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "B3", "A1xA1"])
def test_zero_parameters(label):
    R = build_root_system(label)
    t = enumerate_residual(R, ParameterFunction.equal(0))
    assert len(t.orbits) == 1 and t.orbits[0].dim == R.rank
    rep = verify_all(R, ParameterFunction.equal(0), t)
    assert rep.passed
    assert rep.results["T2"].checked == 0


def test_residual_points_examples():
    B2 = build_root_system("B2")
    pts = residual_points(B2, ONE)
    assert len(pts) == 1 and pts[0].representative.center == (2, 1)
    assert len(residual_points(build_root_system("G2"), ONE)) == 2
    pts = residual_points(build_root_system("A1xA1"), ONE)
    assert len(pts) == 1 and pts[0].orbit_size == 4


@pytest.mark.parametrize(
    "label,k",
    [("A2", {"all": 1}), ("B2", {"long": 1, "short": 2}), ("G2", {"all": 1}), ("B3", {"long": 1, "short": F(1, 2)}),
     ("C3", {"long": 2, "short": 1}), ("A3", {"all": F(3, 2)})],
)
def test_verify_all(label, k):
    R = build_root_system(label)
    k = ParameterFunction.of(k)
    rep = verify_all(R, k, enumerate_residual(R, k))
    assert set(rep.results) == set(ALL_CHECKS)
    assert rep.passed, {n: r.counterexamples for n, r in rep.results.items() if not r.passed}


def test_verify_subset():
    R, t = table("A2")
    rep = verify_all(R, ONE, t, ["T2"])
    assert list(rep.results) == ["T2"] and rep.passed
    with pytest.raises(ValueError):
        verify_all(R, ONE, t, ["T9"])


def test_pair_representation():
    R, t = table("A2")
    pairs = pair_representation(R, t)
    V = pairs[0]
    assert len(V.parabolic) == 0 and V.center == (0, 0, 0)
    lines = [p for p in pairs if p.parabolic.label == "A1"]
    assert len(lines) == 6
    for p in lines:
        a = p.parabolic.roots[0]
        assert abs(sum(x * y for x, y in zip(a, p.center))) == 1
    B2, tb = table("B2")
    pt = next(p for p in pair_representation(B2, tb) if p.center == (2, 1))
    assert pt.parabolic.label == "B2" and len(pt.parabolic) == 8


def test_witness_chains_and_closure():
    R, t = table("G2")
    keys = set(t.by_key())
    for c in t.cosets:
        chain = c.witness_chain
        assert [M.codim for M in chain] == list(range(c.flat.codim + 1))
        for s in R.simple_roots:
            assert c.flat.reflect(s).key in keys
    assert not t.closure_failures


def test_orbit_sizes_sum():
    R, t = table("B3", long=1, short=F(1, 2))
    assert sum(e.orbit_size for e in t.orbits) == len(t.cosets)
    for e in t.point_orbits():
        assert e.orbit_size == orbit_size(R, e.representative.center)


def test_representatives_distinct():
    R, t = table("B3")
    tags = [(e.representative.center, e.representative.flat.direction) for e in t.orbits]
    assert len(set(tags)) == len(tags)


@settings(max_examples=15)
@given(
    label=st.sampled_from(["A2", "B2", "G2", "A1xA1"]),
    c=st.fractions(min_value=F(1, 4), max_value=4, max_denominator=5).filter(lambda x: x > 0),
    r=st.sampled_from([F(1, 3), F(1, 2), F(1), F(2), F(3)]),
)
def test_scaling_equivariance(label, c, r):
    R = build_root_system(label)
    k = ParameterFunction.of({cls: (r if cls.startswith("short") else F(1)) for cls in R.classes})
    base = enumerate_residual(R, k).flats
    scaled = enumerate_residual(R, k.scaled(c)).flats
    assert {L.scaled(c) for L in base} == set(scaled)


def test_max_flats_cap():
    R = build_root_system("B3")
    with pytest.raises(ResourceLimitError):
        enumerate_residual(R, ONE, max_flats=5)


def test_threads_do_not_change_result():
    R = build_root_system("C3")
    k = ParameterFunction.of(long=1, short=F(1, 3))
    a = enumerate_residual(R, k, threads=1)
    b = enumerate_residual(R, k, threads=4)
    assert [c.flat.key for c in a.cosets] == [c.flat.key for c in b.cosets]
    assert [(e.representative.flat.key, e.orbit_size) for e in a.orbits] == [
        (e.representative.flat.key, e.orbit_size) for e in b.orbits
    ]


def test_scan_single_class_constant():
    s = scan_parameters(build_root_system("A2"), [F(1, 2), 1, 2])
    assert s.orbit_counts[0] == s.orbit_counts[1] == s.orbit_counts[2]
    assert s.walls == []


def test_scan_b2():
    s = scan_parameters(build_root_system("B2"), [F(1, 4), F(1, 2), 1, 2, 4])
    assert [c[0] for c in s.orbit_counts] == [2, 1, 1, 2, 2]
    assert s.walls == [F(1, 2), 1]


def test_scan_ratio_zero_is_long_subsystem():
    # long roots of B2 are +-e1+-e2, a copy of A1 x A1
    s = scan_parameters(build_root_system("B2"), [0])
    A1xA1 = build_root_system("A1xA1")
    assert s.flat_counts[0] == enumerate_residual(A1xA1, ONE).flat_counts_by_dim()


def test_residual_line_example():
    B2 = build_root_system("B2")
    t = enumerate_residual(B2, ONE)
    assert flat_from_equations(B2, [((1, -1), 1)]) in t.flats

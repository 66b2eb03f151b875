from fractions import Fraction as F

import pytest

from rescos.dynkin import (
    bala_carter_counts,
    expected_counts,
    load_fixtures,
    point_diagrams,
    to_dot,
    weighted_diagram,
)
from rescos.errors import ConfigurationError, DomainError
from rescos.residual import enumerate_residual
from rescos.rootsys import ParameterFunction, apply_word, build_root_system


def run(label, k=2):
    R = build_root_system(label)
    return R, enumerate_residual(R, ParameterFunction.equal(k))


def test_examples():
    A2 = build_root_system("A2")
    assert weighted_diagram(A2, (F(2), F(0), F(-2))).labels == (2, 2)
    assert weighted_diagram(A2, (0, 0, 0)).labels == (0, 0)
    B2 = build_root_system("B2")
    assert weighted_diagram(B2, (F(4), F(2))).labels == (2, 2)


def test_unequal_rejected():
    B2 = build_root_system("B2")
    with pytest.raises(DomainError):
        weighted_diagram(B2, (1, 0), ParameterFunction.of(long=1, short=2))
    t = enumerate_residual(B2, ParameterFunction.of(long=1, short=2))
    with pytest.raises(DomainError):
        bala_carter_counts(B2, t)


@pytest.mark.parametrize("label,dist,total", [("A2", 1, 3), ("B2", 1, 4), ("G2", 2, 5), ("A3", 1, 5),
                                              ("B3", 1, 7), ("C3", 2, 8), ("A1xA1", 1, 4)])
def test_counts(label, dist, total):
    R, t = run(label)
    c = bala_carter_counts(R, t)
    assert (c.distinguished_found, c.total_orbits_found) == (dist, total)
    assert c.match


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2"])
def test_point_diagrams(label):
    R, t = run(label)
    diagrams = point_diagrams(R, t)
    assert all(x >= 0 for d in diagrams for x in d.labels)
    # distinct point orbits give distinct diagrams
    assert len({d.labels for d in diagrams}) == len(diagrams)
    assert all(d.distinguished_shape for d in diagrams)


def test_scaling_doubles_labels():
    R, t1 = run("G2", 1)
    for e in t1.point_orbits():
        v = e.representative.center
        d1 = weighted_diagram(R, v)
        d2 = weighted_diagram(R, tuple(2 * x for x in v))
        assert d2.labels == tuple(2 * x for x in d1.labels)
    assert point_diagrams(R, t1) == point_diagrams(*run("G2", 2))


def test_orbit_invariance():
    R = build_root_system("B3")
    v = (F(3), F(-1), F(2))
    assert weighted_diagram(R, apply_word(R, [0, 2, 1, 0], v)) == weighted_diagram(R, v)


def test_fixtures():
    fx = load_fixtures()
    for label in ["A1", "A2", "B2", "G2", "F4"]:
        assert {"distinguished", "nilpotent", "source"} <= set(fx[label])
    assert expected_counts(build_root_system("A2xB2"), fx) == (1, 12)
    with pytest.raises(ConfigurationError):
        expected_counts(build_root_system("A2"), {})


def test_dot():
    R = build_root_system("G2")
    text = to_dot(R, weighted_diagram(R, (0, 0, 0)))
    assert text.startswith('graph "G2"') and 'a0 -- a1 [label="3"]' in text

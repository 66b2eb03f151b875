from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from rescos.rootsys import build_root_system

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"]

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def vectors(n):
    return st.tuples(*[fractions] * n)


def words(R, max_size=8):
    return st.lists(st.integers(0, R.rank - 1), max_size=max_size)


def in_span(R, coeffs):
    """A point of V = span(R) from coefficients on the simple roots."""
    v = [Fraction(0)] * R.ambient_dim
    for c, a in zip(coeffs, R.simple_roots):
        v = [x + c * y for x, y in zip(v, a)]
    return tuple(v)


@pytest.fixture(scope="session")
def systems():
    return {t: build_root_system(t) for t in SMALL_TYPES + ["F4"]}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

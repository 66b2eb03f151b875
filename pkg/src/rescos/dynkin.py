"""Weighted Dynkin diagrams of residual centers at equal parameters.

With k = 2 on every root, the dominant center of a residual flat gives
labels alpha_i(v) on the simple roots; for residual points these should be
the diagrams of distinguished nilpotent orbits. Orbit counts are compared
against a fixture of Bala-Carter numerology (see
``scripts/derive_bala_carter.py``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from .errors import ConfigurationError, DomainError
from .linalg import Vector, dot
from .residual import OrbitTable
from .rootsys import ParameterFunction, RootSystem, dominant_representative


@dataclass(frozen=True)
class WeightedDiagram:
    labels: tuple[Fraction, ...]
    source: Vector

    @property
    def distinguished_shape(self) -> bool:
        """All labels in {0, 2}."""
        return all(x in (0, 2) for x in self.labels)

    def to_json(self) -> dict:
        return {"labels": [str(x) for x in self.labels], "source": [str(x) for x in self.source]}


def weighted_diagram(R: RootSystem, center: Sequence[Fraction], k: ParameterFunction | None = None) -> WeightedDiagram:
    if k is not None and not k.is_equal(R):
        raise DomainError("weighted diagrams are only defined for equal parameters")
    dom, _ = dominant_representative(R, center)
    return WeightedDiagram(tuple(dot(a, dom) for a in R.simple_roots), dom)


def to_dot(R: RootSystem, diagram: WeightedDiagram) -> str:
    lines = [f'graph "{R.label}" {{']
    for i, x in enumerate(diagram.labels):
        lines.append(f'  a{i} [label="{x}"];')
    cm = R.cartan_matrix
    for i in range(len(cm)):
        for j in range(i + 1, len(cm)):
            bonds = cm[i][j] * cm[j][i]
            if bonds:
                lines.append(f'  a{i} -- a{j} [label="{bonds}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_fixtures(path: str | Path | None = None) -> dict:
    if path is not None:
        return json.loads(Path(path).read_text())
    text = resources.files("rescos").joinpath("data/bala_carter.json").read_text()
    return json.loads(text)


def expected_counts(R: RootSystem, fixtures: dict | None = None) -> tuple[int, int]:
    """(distinguished, nilpotent) for R; products multiply."""
    fixtures = load_fixtures() if fixtures is None else fixtures
    dist = nil = 1
    for letter, n in R.components:
        label = f"{letter}{n}"
        if label not in fixtures:
            raise ConfigurationError(f"no Bala-Carter fixture for {label}")
        dist *= fixtures[label]["distinguished"]
        nil *= fixtures[label]["nilpotent"]
    return dist, nil


@dataclass
class BalaCarterCounts:
    distinguished_expected: int
    nilpotent_expected: int
    distinguished_found: int
    total_orbits_found: int

    @property
    def match(self) -> bool:
        return (self.distinguished_expected, self.nilpotent_expected) == (
            self.distinguished_found,
            self.total_orbits_found,
        )

    def to_json(self) -> dict:
        return {
            "distinguished_expected": self.distinguished_expected,
            "nilpotent_expected": self.nilpotent_expected,
            "distinguished_found": self.distinguished_found,
            "total_orbits_found": self.total_orbits_found,
            "match": self.match,
        }


def bala_carter_counts(R: RootSystem, table: OrbitTable, fixtures: dict | None = None) -> BalaCarterCounts:
    if not table.params.is_equal(R):
        raise DomainError("Bala-Carter counts need equal parameters")
    d, m = expected_counts(R, fixtures)
    return BalaCarterCounts(d, m, len(table.point_orbits()), len(table.orbits))


def point_diagrams(R: RootSystem, table: OrbitTable) -> list[WeightedDiagram]:
    """Diagrams of residual point orbits, rescaled to k = 2."""
    if not table.params.is_equal(R):
        raise DomainError("weighted diagrams are only defined for equal parameters")
    k = next(iter(table.params.for_system(R).values()))
    if not k:
        return []
    c = 2 / k
    out = []
    for e in table.point_orbits():
        v = tuple(c * x for x in e.representative.center)
        out.append(weighted_diagram(R, v))
    return out

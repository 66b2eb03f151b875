"""Affine flats of the shifted root hyperplane arrangement.

A flat lives in the ambient space of a root system but always inside
V = span(R_0): the equations of the orthogonal complement of V are part
of every flat. A flat is stored as the reduced row echelon form of its
augmented equation matrix ``[normal | offset]`` with unit pivots, which
makes equality of flats equality of tuples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import ResourceLimitError
from .linalg import ZERO, Vector, dot, inverse, nullspace, rref
from .rootsys import ParameterFunction, RootSystem, reflect


class Incidence(enum.Enum):
    """Outcome of intersecting a flat with a hyperplane parallel to it."""

    CONTAINS = "contains"
    DISJOINT = "disjoint"


EMPTY = Incidence.DISJOINT

Row = tuple  # augmented row: normal entries followed by the offset


@dataclass(frozen=True)
class AffineFlat:
    rows: tuple[Row, ...]
    pivots: tuple[int, ...] = field(compare=False)
    ambient_dim: int
    space_dim: int = field(compare=False)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.rows)

    @property
    def codim(self) -> int:
        return self.space_dim - self.dim

    @property
    def key(self) -> tuple[Row, ...]:
        return self.rows

    @property
    def normals(self) -> tuple[Vector, ...]:
        return tuple(r[:-1] for r in self.rows)

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return tuple(r[-1] for r in self.rows)

    @cached_property
    def direction(self) -> tuple[Vector, ...]:
        """Basis of the direction space V^L, read off the echelon form."""
        return tuple(nullspace(self.normals, self.ambient_dim))

    @cached_property
    def offset_point(self) -> Vector:
        x = [ZERO] * self.ambient_dim
        for row, p in zip(self.rows, self.pivots):
            x[p] = row[-1]
        return tuple(x)

    @cached_property
    def center(self) -> Vector:
        """The point of L orthogonal to V^L (minimum-norm point of L)."""
        if not self.rows:
            return (ZERO,) * self.ambient_dim
        normals = self.normals
        gram = [[dot(a, b) for b in normals] for a in normals]
        ginv = inverse(gram)
        y = [dot(g, self.offsets) for g in ginv]
        return tuple(
            sum((yi * n[j] for yi, n in zip(y, normals)), ZERO)
            for j in range(self.ambient_dim)
        )

    def constant_value(self, alpha: Sequence[Fraction]) -> Fraction | None:
        """alpha restricted to L if it is constant there, else None."""
        resid = list(alpha)
        val = ZERO
        for row, p in zip(self.rows, self.pivots):
            f = resid[p]
            if f:
                for j in range(self.ambient_dim):
                    if row[j]:
                        resid[j] -= f * row[j]
                val += f * row[-1]
        if any(resid):
            return None
        return val

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(dot(r[:-1], v) == r[-1] for r in self.rows)

    def contains_flat(self, other: "AffineFlat") -> bool:
        return all(other.constant_value(r[:-1]) == r[-1] for r in self.rows)

    def map_linear(self, fn) -> "AffineFlat":
        """Image under an orthogonal map ``fn`` (applied to normals)."""
        return canonicalize(
            ((fn(r[:-1]), r[-1]) for r in self.rows), self.ambient_dim, self.space_dim
        )

    def reflect(self, alpha: Vector) -> "AffineFlat":
        return self.map_linear(lambda n: reflect(alpha, n))

    def scaled(self, c) -> "AffineFlat":
        c = Fraction(c)
        return canonicalize(
            ((r[:-1], c * r[-1]) for r in self.rows), self.ambient_dim, self.space_dim
        )

    def __repr__(self) -> str:
        return f"AffineFlat(dim={self.dim}, center={tuple(str(x) for x in self.center)})"


def canonicalize(
    equations: Iterable[tuple[Sequence[Fraction], Fraction]],
    ambient_dim: int,
    space_dim: int,
) -> AffineFlat | Incidence:
    """Canonical flat of a linear system, or ``EMPTY`` if inconsistent."""
    aug = [tuple(Fraction(x) for x in n) + (Fraction(c),) for n, c in equations]
    red, pivots = rref(aug, ambient_dim + 1)
    if pivots and pivots[-1] == ambient_dim:
        return EMPTY
    return AffineFlat(tuple(red), tuple(pivots), ambient_dim, space_dim)


def full_space(R: RootSystem) -> AffineFlat:
    return canonicalize(((n, 0) for n in R.complement), R.ambient_dim, R.rank)


def flat_from_point(R: RootSystem, point: Sequence[Fraction], direction: Sequence[Vector]) -> AffineFlat:
    """point + span(direction), intersected with V."""
    normals = nullspace(list(direction), R.ambient_dim) if direction else [
        tuple(Fraction(int(i == j)) for j in range(R.ambient_dim)) for i in range(R.ambient_dim)
    ]
    eqs = [(n, dot(n, point)) for n in normals] + [(n, dot(n, point)) for n in R.complement]
    return canonicalize(eqs, R.ambient_dim, R.rank)


def flat_from_equations(R: RootSystem, equations) -> AffineFlat | Incidence:
    eqs = list(equations) + [(n, 0) for n in R.complement]
    return canonicalize(eqs, R.ambient_dim, R.rank)


def intersect(L: AffineFlat, alpha: Sequence[Fraction], c) -> AffineFlat | Incidence:
    """L ∩ {alpha(v) = c}; an Incidence when alpha is constant on L.

    Inserts one row into the echelon form instead of re-reducing.
    """
    n = L.ambient_dim
    r = list(alpha) + [Fraction(c)]
    for row, p in zip(L.rows, L.pivots):
        f = r[p]
        if f:
            r = [a - f * b for a, b in zip(r, row)]
    p_new = next((j for j in range(n) if r[j]), None)
    if p_new is None:
        return Incidence.CONTAINS if not r[n] else Incidence.DISJOINT
    lead = r[p_new]
    if lead != 1:
        r = [x / lead for x in r]
    new = tuple(r)
    rows = []
    for row in L.rows:
        f = row[p_new]
        if f:
            row = tuple(a - f * b for a, b in zip(row, new))
        rows.append(row)
    pivots = list(L.pivots)
    pos = 0
    while pos < len(pivots) and pivots[pos] < p_new:
        pos += 1
    rows.insert(pos, new)
    pivots.insert(pos, p_new)
    return AffineFlat(tuple(rows), tuple(pivots), n, L.space_dim)


@dataclass(frozen=True)
class IndexReport:
    hits: int
    zeros: int
    codim: int

    @property
    def i(self) -> int:
        return self.hits - self.zeros

    @property
    def o(self) -> int:
        return self.i - self.codim


def order_point(R: RootSystem, k: ParameterFunction, v: Sequence[Fraction], dim: int | None = None) -> int:
    """o(v): roots with alpha(v) = k_alpha, minus roots vanishing at v, minus dim V."""
    kv = R.kvals(k)
    return _order_at(R.roots, kv, v, R.rank if dim is None else dim)


def _order_at(roots, kv, v, dim) -> int:
    hits = zeros = 0
    for a, ka in zip(roots, kv):
        x = dot(a, v)
        if x == ka:
            hits += 1
        if not x:
            zeros += 1
    return hits - zeros - dim


def index_report(R: RootSystem, kv: Sequence[Fraction], L: AffineFlat) -> IndexReport:
    """Like :func:`order_flat` with the per-root parameters precomputed."""
    hits = zeros = 0
    for a, ka in zip(R.roots, kv):
        x = L.constant_value(a)
        if x is None:
            continue
        if x == ka:
            hits += 1
        if not x:
            zeros += 1
    return IndexReport(hits, zeros, L.codim)


def order_flat(R: RootSystem, k: ParameterFunction, L: AffineFlat) -> IndexReport:
    return index_report(R, R.kvals(k), L)


def order_flat_reduced(R: RootSystem, k: ParameterFunction, L: AffineFlat) -> int:
    """o_L recomputed as o(R_L, V_L, k|R_L; v_L).

    Only roots of the parabolic R_L are evaluated, at the center, against
    dim V_L = codim L.
    """
    kv = R.kvals(k)
    d = L.direction
    idx = [i for i, r in enumerate(R.roots) if all(not dot(r, x) for x in d)]
    return _order_at([R.roots[i] for i in idx], [kv[i] for i in idx], L.center, L.codim)


def hit_hyperplanes(R: RootSystem, k: ParameterFunction) -> list[tuple[Vector, Fraction]]:
    """The shifted hyperplanes {alpha = k_alpha}, one per root."""
    return list(zip(R.roots, R.kvals(k)))


def intersection_lattice(
    R: RootSystem,
    k: ParameterFunction,
    max_codim: int | None = None,
    max_flats: int = 10**6,
) -> Iterator[list[AffineFlat]]:
    """Yield the flats of the intersection lattice, one codimension at a time.

    Level 0 is V itself; level c+1 is every nonempty proper intersection
    of a level-c flat with a shifted hyperplane, deduplicated.
    """
    top = R.rank if max_codim is None else min(max_codim, R.rank)
    planes = hit_hyperplanes(R, k)
    level = [full_space(R)]
    total = 1
    yield level
    for _ in range(top):
        nxt: dict = {}
        for M in level:
            for a, c in planes:
                L = intersect(M, a, c)
                if isinstance(L, Incidence):
                    continue
                if L.key not in nxt:
                    nxt[L.key] = L
        if not nxt:
            return
        total += len(nxt)
        if total > max_flats:
            raise ResourceLimitError(f"intersection lattice exceeds {max_flats} flats", partial=level)
        level = [nxt[key] for key in sorted(nxt)]
        yield level

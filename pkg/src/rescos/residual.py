"""Residual affine subspaces: descent enumeration, orbits and checks.

The enumerator starts from V and repeatedly cuts a residual flat M with a
shifted hyperplane {alpha = k_alpha} not containing it, keeping the cut L
when its index jumps, i_L >= i_M + 1. Zero hyperplanes are never used to
cut; they only enter through the index.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .arrangement import (
    AffineFlat,
    Incidence,
    IndexReport,
    full_space,
    flat_from_equations,
    index_report,
    intersect,
    intersection_lattice,
    order_flat_reduced,
    order_point,
)
from .errors import ResourceLimitError, VerificationError
from .linalg import ZERO, Vector, dot, neg
from .rootsys import (
    ParameterFunction,
    RootSystem,
    Subsystem,
    dominant_representative,
    is_dominant,
    parabolic_subsystem,
    same_orbit,
)

DEFAULT_MAX_FLATS = 10**6


@dataclass(frozen=True)
class ResidualCoset:
    flat: AffineFlat
    report: IndexReport
    witness_chain: tuple[AffineFlat, ...]

    @property
    def dim(self) -> int:
        return self.flat.dim

    @property
    def center(self) -> Vector:
        return self.flat.center

    @property
    def tempered_tag(self) -> tuple[Vector, tuple[Vector, ...]]:
        return self.flat.center, self.flat.direction

    def parabolic(self, R: RootSystem) -> Subsystem:
        return parabolic_subsystem(R, self.flat.direction)


@dataclass(frozen=True)
class OrbitEntry:
    representative: ResidualCoset
    orbit_size: int
    parabolic_type: str
    members: tuple[tuple, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.representative.dim

    @property
    def i(self) -> int:
        return self.representative.report.i

    @property
    def o(self) -> int:
        return self.representative.report.o


@dataclass(frozen=True)
class OrbitTable:
    system: RootSystem
    params: ParameterFunction
    cosets: tuple[ResidualCoset, ...]
    orbits: tuple[OrbitEntry, ...]
    closure_failures: tuple[tuple, ...] = ()

    def by_key(self) -> dict[tuple, ResidualCoset]:
        return {c.flat.key: c for c in self.cosets}

    @property
    def flats(self) -> frozenset[AffineFlat]:
        return frozenset(c.flat for c in self.cosets)

    @property
    def points(self) -> list[ResidualCoset]:
        return [c for c in self.cosets if c.dim == 0]

    def point_orbits(self) -> list[OrbitEntry]:
        return [e for e in self.orbits if e.dim == 0]

    def counts_by_dim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.orbits:
            out[e.dim] = out.get(e.dim, 0) + 1
        return dict(sorted(out.items()))

    def flat_counts_by_dim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.cosets:
            out[c.dim] = out.get(c.dim, 0) + 1
        return dict(sorted(out.items()))


def _restrictions(M: AffineFlat, roots):
    """Each root restricted to M as ``(lead, u, value)``.

    On M a non-constant root reads beta(v) = lead * u.v + value where u is
    normalized to have first nonzero entry 1; constant roots give None.
    """
    out = []
    for beta in roots:
        resid = list(beta)
        val = ZERO
        for row, p in zip(M.rows, M.pivots):
            f = resid[p]
            if f:
                resid = [a - f * b for a, b in zip(resid, row)]
                val += f * row[-1]
        lead = next((x for x in resid if x), None)
        if lead is None:
            out.append(None)
            continue
        u = tuple(x / lead for x in resid) if lead != 1 else tuple(resid)
        out.append((lead, u, val))
    return out


def _children(R, kv, M: ResidualCoset):
    """Cuts of M by shifted hyperplanes that raise the index by at least one.

    Roots with proportional restrictions to M cut it along the same family
    of parallel hyperplanes {u.v = s}; the index gained on the slice s is
    the number of new hits minus the number of new zeros there.
    """
    families: dict[tuple, dict] = {}
    for idx, (res, ka) in enumerate(zip(_restrictions(M.flat, R.roots), kv)):
        if res is None:
            continue
        lead, u, val = res
        fam = families.setdefault(u, {})
        s_hit = (ka - val) / lead
        s_zero = -val / lead
        h = fam.setdefault(s_hit, [0, 0, None])
        h[0] += 1
        if h[2] is None:
            h[2] = idx
        fam.setdefault(s_zero, [0, 0, None])[1] += 1
    out = []
    for u in sorted(families):
        for s, (hits, zeros, idx) in sorted(families[u].items()):
            if hits - zeros >= 1:
                L = intersect(M.flat, R.roots[idx], kv[idx])
                rep = IndexReport(M.report.hits + hits, M.report.zeros + zeros, L.codim)
                out.append(ResidualCoset(L, rep, M.witness_chain + (L,)))
    return out


def enumerate_residual(
    R: RootSystem,
    k: ParameterFunction,
    max_flats: int = DEFAULT_MAX_FLATS,
    threads: int = 1,
) -> OrbitTable:
    """All residual flats of (R, k), grouped into W_0-orbits."""
    kv = R.kvals(k)
    V = full_space(R)
    top = ResidualCoset(V, index_report(R, kv, V), (V,))
    found: dict[tuple, ResidualCoset] = {V.key: top}
    level = [top]
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while level:
            mapper = pool.map if pool else map
            batches = mapper(lambda M: _children(R, kv, M), level)
            nxt: dict[tuple, ResidualCoset] = {}
            for batch in batches:
                for c in batch:
                    if c.flat.key not in nxt:
                        nxt[c.flat.key] = c
            found.update(nxt)
            if len(found) > max_flats:
                raise ResourceLimitError(
                    f"more than {max_flats} residual flats", partial=[nxt[key] for key in sorted(nxt)]
                )
            level = [nxt[key] for key in sorted(nxt)]
    finally:
        if pool:
            pool.shutdown()
    cosets = tuple(found[key] for key in sorted(found, key=lambda key: (len(key), key)))
    orbits, failures = group_orbits(R, cosets)
    return OrbitTable(R, k.resolved(R), cosets, orbits, failures)


def group_orbits(R: RootSystem, cosets: Sequence[ResidualCoset]):
    """Orbits as connected components under the simple reflections.

    The representative is the member with dominant center whose canonical
    equations are lexicographically smallest. Images that fall outside the
    table are reported as closure failures.
    """
    keys = [c.flat.key for c in cosets]
    pos = {key: i for i, key in enumerate(keys)}
    parent = list(range(len(keys)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    failures = []
    for i, c in enumerate(cosets):
        for s in R.simple_roots:
            img = c.flat.reflect(s)
            j = pos.get(img.key)
            if j is None:
                failures.append(c.flat.key)
                continue
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    comps: dict[int, list[int]] = {}
    for i in range(len(keys)):
        comps.setdefault(find(i), []).append(i)
    entries = []
    for members in comps.values():
        dominant = [i for i in members if is_dominant(R, cosets[i].center)]
        rep = cosets[min(dominant or members, key=lambda i: keys[i])]
        entries.append(
            OrbitEntry(
                representative=rep,
                orbit_size=len(members),
                parabolic_type=rep.parabolic(R).label,
                members=tuple(sorted(keys[i] for i in members)),
            )
        )
    entries.sort(key=lambda e: (-e.dim, e.representative.center, e.representative.flat.key))
    return tuple(entries), tuple(failures)


def residual_points(R: RootSystem, k: ParameterFunction, table: OrbitTable | None = None) -> list[OrbitEntry]:
    table = table or enumerate_residual(R, k)
    return table.point_orbits()


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    counterexamples: list = field(default_factory=list)
    note: str = ""


@dataclass
class VerificationReport:
    label: str
    params: str
    results: dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())


ALL_CHECKS = ("T1a", "T1b", "T2", "T3", "T5B", "L4.1")


def _check(name, items, predicate, describe=lambda x: x) -> CheckResult:
    bad = []
    n = 0
    for x in items:
        n += 1
        if not predicate(x):
            bad.append(describe(x))
    return CheckResult(name, not bad, n, bad[:20])


def _flat_dict(L: AffineFlat, rep: IndexReport | None = None) -> dict:
    d = {"equations": [[str(x) for x in r] for r in L.rows], "center": [str(x) for x in L.center], "dim": L.dim}
    if rep is not None:
        d.update(hits=rep.hits, zeros=rep.zeros, i=rep.i, o=rep.o)
    return d


def verify_all(
    R: RootSystem,
    k: ParameterFunction,
    table: OrbitTable,
    checks: Iterable[str] | None = None,
    lattice_max_codim: int | None = None,
) -> VerificationReport:
    """Run the structural checks on an enumerated table.

    T1a: o_L <= 0 on the whole intersection lattice (up to
    ``lattice_max_codim``). T1b: finitely many residual points, closed
    under W_0. T2: -v in W_0 v for residual points. T3: centers of
    positive-dimensional residual flats are not residual points. T5B:
    o_L = 0 on every enumerated flat, with monotone witness chains and
    maximality. L4.1: every residual point lies on a residual line.
    """
    wanted = tuple(checks) if checks else ALL_CHECKS
    unknown = set(wanted) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}; choose from {ALL_CHECKS}")
    kv = R.kvals(k)
    results: dict[str, CheckResult] = {}
    points = table.points

    if "T1a" in wanted:
        def lattice():
            for level in intersection_lattice(R, k, lattice_max_codim):
                for L in level:
                    yield L, index_report(R, kv, L)

        results["T1a"] = _check("T1a", lattice(), lambda x: x[1].o <= 0, lambda x: _flat_dict(*x))

    if "T1b" in wanted:
        keys = {c.flat.key for c in points}
        bound = math.comb(len(R.roots), R.rank)

        def closed(c):
            return all(c.flat.reflect(s).key in keys for s in R.simple_roots)

        res = _check("T1b", points, closed, lambda c: _flat_dict(c.flat))
        if len(points) > bound:
            res.passed = False
            res.note = f"{len(points)} points exceed the candidate bound {bound}"
        if table.closure_failures:
            res.passed = False
            res.note += f" {len(table.closure_failures)} flats map outside the table"
        results["T1b"] = res

    if "T2" in wanted:
        results["T2"] = _check(
            "T2", points, lambda c: same_orbit(R, c.center, neg(c.center)), lambda c: _flat_dict(c.flat)
        )

    if "T3" in wanted:
        positive = [c for c in table.cosets if c.dim > 0]
        results["T3"] = _check(
            "T3",
            positive,
            lambda c: order_point(R, k, c.center) < 0,
            lambda c: _flat_dict(c.flat, c.report),
        )

    if "T5B" in wanted:
        def exact(c):
            return (
                c.report.o == 0
                and order_flat_reduced(R, k, c.flat) == 0
                and _chain_ok(R, kv, c)
                and _maximal(R, kv, c)
            )

        results["T5B"] = _check("T5B", table.cosets, exact, lambda c: _flat_dict(c.flat, c.report))

    if "L4.1" in wanted:
        lines = [c.flat for c in table.cosets if c.dim == 1]
        results["L4.1"] = _check(
            "L4.1",
            points,
            lambda c: any(L.contains(c.center) for L in lines),
            lambda c: _flat_dict(c.flat),
        )
    return VerificationReport(table.system.label, str(table.params), results)


def _chain_ok(R, kv, c: ResidualCoset) -> bool:
    chain = c.witness_chain
    if chain[0].codim != 0 or chain[-1] != c.flat:
        return False
    reports = [index_report(R, kv, M) for M in chain]
    for (M, rm), (L, rl) in zip(zip(chain, reports), zip(chain[1:], reports[1:])):
        if L.codim != M.codim + 1 or rl.i != rm.i + 1 or not M.contains_flat(L):
            return False
    return True


def _maximal(R, kv, c: ResidualCoset) -> bool:
    """Intersecting every hit hyperplane containing L gives back L."""
    eqs = [(a, ka) for a, ka in zip(R.roots, kv) if c.flat.constant_value(a) == ka]
    M = flat_from_equations(R, eqs)
    return M == c.flat


@dataclass(frozen=True)
class ParabolicPair:
    parabolic: Subsystem
    center: Vector

    @property
    def key(self):
        return self.parabolic.indices, self.center


def pair_representation(R: RootSystem, table: OrbitTable) -> list[ParabolicPair]:
    """Each residual flat as (R_L, r_L); raises if the map is not a bijection."""
    pairs = []
    seen: dict = {}
    for c in table.cosets:
        sub = c.parabolic(R)
        pair = ParabolicPair(sub, c.center)
        if pair.key in seen:
            raise VerificationError("two residual flats share a pair", counterexample=_flat_dict(c.flat))
        seen[pair.key] = c.flat
        back = flat_from_equations(R, ((a, dot(a, c.center)) for a in sub.roots))
        if back != c.flat:
            raise VerificationError("pair does not reconstruct its flat", counterexample=_flat_dict(c.flat))
        pairs.append(pair)
    return pairs


@dataclass
class ScanReport:
    label: str
    ratios: list[Fraction]
    orbit_counts: list[dict[int, int]]
    flat_counts: list[dict[int, int]]
    walls: list[Fraction]


def scan_parameters(
    R: RootSystem,
    ratios: Sequence,
    max_flats: int = DEFAULT_MAX_FLATS,
) -> ScanReport:
    """Orbit counts by dimension as k_short/k_long varies (k_long = 1).

    A grid point is a wall when some neighbour has strictly more residual
    flats: special parameters lose residual cosets.
    For one-class systems only the overall scale moves, and counts are
    constant for every nonzero value.
    """
    ratios = [Fraction(r) for r in ratios]
    two_class = any(c.startswith("short") for c in R.classes)
    orbit_counts, flat_counts = [], []
    for r in ratios:
        k = ParameterFunction.of(long=1, short=r) if two_class else ParameterFunction.equal(r)
        t = enumerate_residual(R, k, max_flats=max_flats)
        orbit_counts.append(t.counts_by_dim())
        flat_counts.append(t.flat_counts_by_dim())
    totals = [sum(c.values()) for c in flat_counts]
    walls = [
        ratios[i]
        for i in range(len(ratios))
        if any(0 <= j < len(ratios) and totals[j] > totals[i] for j in (i - 1, i + 1))
    ]
    return ScanReport(R.label, ratios, orbit_counts, flat_counts, walls)

"""Brute-force residual flats, for differential testing of the enumerator.

Nothing here uses the descent. Flats are produced by solving every subset
of shifted hyperplanes from scratch; a subset larger than the rank adds
nothing, since any flat of the lattice is cut out by a subset of
independent hyperplanes of size equal to its codimension.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .arrangement import (
    AffineFlat,
    Incidence,
    canonicalize,
    full_space,
    hit_hyperplanes,
    order_flat,
    order_point,
)
from .errors import ConfigurationError, ResourceLimitError, VerificationError
from .linalg import rank, solve
from .rootsys import ParameterFunction, RootSystem

DEFAULT_MAX_RANK = 4
DEFAULT_MAX_SUBSETS = 5 * 10**5


def _distinct_planes(R: RootSystem, k: ParameterFunction):
    # k_alpha = 0 makes alpha and -alpha cut the same hyperplane
    seen = {}
    for a, c in hit_hyperplanes(R, k):
        flat = canonicalize([(a, c)], R.ambient_dim, R.rank)
        seen.setdefault(flat.key, (a, c))
    return [seen[key] for key in sorted(seen)]


def _check_size(R, planes, top, max_rank, max_subsets):
    if R.rank > max_rank:
        raise ConfigurationError(f"oracle limited to rank <= {max_rank}, got {R.label}")
    n = sum(math.comb(len(planes), s) for s in range(1, top + 1))
    if n > max_subsets:
        raise ResourceLimitError(f"{n} hyperplane subsets exceed cap {max_subsets}", partial=n)


def lattice_flats(
    R: RootSystem,
    k: ParameterFunction,
    max_codim: int | None = None,
    max_rank: int = DEFAULT_MAX_RANK,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> set[AffineFlat]:
    """Every flat of the intersection lattice with codim <= max_codim."""
    planes = _distinct_planes(R, k)
    top = R.rank if max_codim is None else min(max_codim, R.rank)
    _check_size(R, planes, top, max_rank, max_subsets)
    comp = [(n, 0) for n in R.complement]
    flats = {full_space(R)}
    for size in range(1, top + 1):
        for subset in itertools.combinations(planes, size):
            if rank([a for a, _ in subset]) < size:
                continue
            L = canonicalize(list(subset) + comp, R.ambient_dim, R.rank)
            if not isinstance(L, Incidence):
                flats.add(L)
    return flats


def brute_force_flats(
    R: RootSystem,
    k: ParameterFunction,
    max_codim: int | None = None,
    max_rank: int = DEFAULT_MAX_RANK,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> frozenset[AffineFlat]:
    """Flats of the lattice with o_L >= 0; raises if any has o_L > 0."""
    out = set()
    for L in lattice_flats(R, k, max_codim, max_rank, max_subsets):
        rep = order_flat(R, k, L)
        if rep.o > 0:
            raise VerificationError("flat with positive order", counterexample=L)
        if rep.o == 0:
            out.add(L)
    return frozenset(out)


def brute_force_points(
    R: RootSystem,
    k: ParameterFunction,
    max_rank: int = DEFAULT_MAX_RANK,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> frozenset[tuple]:
    """Zeros of o among all vertices of the arrangement."""
    planes = _distinct_planes(R, k)
    n = R.rank
    _check_size(R, planes, 0, max_rank, max_subsets)
    if math.comb(len(planes), n) > max_subsets:
        raise ResourceLimitError("too many vertex candidates", partial=math.comb(len(planes), n))
    comp = list(R.complement)
    seen: set[tuple] = set()
    out = set()
    for subset in itertools.combinations(planes, n):
        a = [p for p, _ in subset] + comp
        b = [c for _, c in subset] + [0] * len(comp)
        v = solve(a, b)
        if v is None or v in seen:
            continue
        seen.add(v)
        if order_point(R, k, v) == 0:
            out.add(v)
    return frozenset(out)


@dataclass
class SetDiff:
    only_left: list
    only_right: list

    @property
    def identical(self) -> bool:
        return not self.only_left and not self.only_right


def diff_flats(left, right) -> SetDiff:
    a = {f.key: f for f in left}
    b = {f.key: f for f in right}
    return SetDiff(
        [a[key] for key in sorted(set(a) - set(b))],
        [b[key] for key in sorted(set(b) - set(a))],
    )

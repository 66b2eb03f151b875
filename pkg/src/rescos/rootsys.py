"""Root systems in exact rational coordinates and their Weyl group action.

Realizations follow Bourbaki: A_n sits in the sum-zero hyperplane of
Q^{n+1}, B/C/D in Q^n, G_2 in the sum-zero hyperplane of Q^3, F_4 in
Q^4, E_8 in Q^8 with E_7/E_6 spanned by the first simple roots of E_8.
The Weyl group is never materialized; orbits are handled through
dominant representatives and closure under simple reflections.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import ConfigurationError, ResourceLimitError
from .linalg import ONE, ZERO, Vector, dot, nullspace, rank, rref, solve, vec

SUPPORTED_RANKS = {
    "A": range(1, 9),
    "B": range(2, 9),
    "C": range(2, 9),
    "D": range(4, 9),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}

DEFAULT_ORBIT_CAP = 10**7


def _e(n: int, *entries: tuple[int, object]) -> Vector:
    v = [ZERO] * n
    for i, c in entries:
        v[i] = Fraction(c)
    return tuple(v)


def _simple_roots(letter: str, n: int) -> tuple[int, list[Vector]]:
    """Ambient dimension and Bourbaki simple roots of an irreducible type."""
    if letter == "A":
        d = n + 1
        return d, [_e(d, (i, 1), (i + 1, -1)) for i in range(n)]
    if letter in "BCD":
        d = n
        simple = [_e(d, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        if letter == "B":
            simple.append(_e(d, (n - 1, 1)))
        elif letter == "C":
            simple.append(_e(d, (n - 1, 2)))
        else:
            simple.append(_e(d, (n - 2, 1), (n - 1, 1)))
        return d, simple
    if letter == "G":
        return 3, [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    if letter == "F":
        h = Fraction(1, 2)
        return 4, [
            _e(4, (1, 1), (2, -1)),
            _e(4, (2, 1), (3, -1)),
            _e(4, (3, 1)),
            _e(4, (0, h), (1, -h), (2, -h), (3, -h)),
        ]
    if letter == "E":
        h = Fraction(1, 2)
        e8 = [
            _e(8, (0, h), (7, h), *((i, -h) for i in range(1, 7))),
            _e(8, (0, 1), (1, 1)),
        ] + [_e(8, (i, 1), (i - 1, -1)) for i in range(1, 7)]
        return 8, e8[:n]
    raise ConfigurationError(f"unknown type {letter!r}")


def reflect(alpha: Vector, v: Sequence[Fraction]) -> Vector:
    """The orthogonal reflection s_alpha applied to v."""
    c = 2 * dot(alpha, v) / dot(alpha, alpha)
    if not c:
        return tuple(v)
    return tuple(x - c * a for x, a in zip(v, alpha))


def _closure(simple: Sequence[Vector]) -> list[Vector]:
    seen = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for s in simple:
            t = reflect(s, r)
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return list(seen)


@dataclass(frozen=True)
class RootSystem:
    """A reduced crystallographic root system with a chosen base.

    ``roots`` lists the positive roots (by height, then lexicographically)
    followed by their negatives in the same order, so root ``i`` and root
    ``i + npos`` are opposite.
    """

    label: str
    components: tuple[tuple[str, int], ...]
    ambient_dim: int
    roots: tuple[Vector, ...]
    simple_roots: tuple[Vector, ...]
    root_class: tuple[str, ...]

    @property
    def npos(self) -> int:
        return len(self.roots) // 2

    @property
    def positive_roots(self) -> tuple[Vector, ...]:
        return self.roots[: self.npos]

    @cached_property
    def rank(self) -> int:
        """dim V, where V is the span of the roots."""
        return len(self.simple_roots)

    @cached_property
    def index(self) -> dict[Vector, int]:
        return {r: i for i, r in enumerate(self.roots)}

    @cached_property
    def classes(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.root_class)))

    @cached_property
    def length_classes(self) -> dict[str, tuple[int, ...]]:
        out: dict[str, list[int]] = {c: [] for c in self.classes}
        for i, c in enumerate(self.root_class):
            out[c].append(i)
        return {c: tuple(v) for c, v in out.items()}

    @cached_property
    def complement(self) -> tuple[Vector, ...]:
        """Basis of the orthogonal complement of V in the ambient space."""
        if not self.simple_roots:
            return tuple(_e(self.ambient_dim, (i, 1)) for i in range(self.ambient_dim))
        return tuple(nullspace(self.simple_roots, self.ambient_dim))

    @cached_property
    def simple_coords(self) -> tuple[tuple[Fraction, ...], ...]:
        """Each root written in the basis of simple roots."""
        return tuple(_coords(self.simple_roots, r) for r in self.roots)

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        s = self.simple_roots
        return tuple(
            tuple(int(2 * dot(a, b) / dot(b, b)) for b in s) for a in s
        )

    def kvals(self, k: "ParameterFunction") -> tuple[Fraction, ...]:
        """k_alpha for every root, aligned with ``roots``."""
        vals = k.for_system(self)
        return tuple(vals[c] for c in self.root_class)

    def __repr__(self) -> str:
        return f"RootSystem({self.label!r}, roots={len(self.roots)})"


def _coords(basis: Sequence[Vector], v: Vector) -> tuple[Fraction, ...]:
    gram = [[dot(a, b) for b in basis] for a in basis]
    rhs = [dot(a, v) for a in basis]
    x = solve(gram, rhs)
    if x is None:
        raise ValueError("basis is singular")
    return x


def _assemble(
    label: str,
    components: tuple[tuple[str, int], ...],
    ambient_dim: int,
    simple: Sequence[Vector],
    all_roots: Iterable[Vector],
    class_of,
) -> RootSystem:
    roots = list(all_roots)
    coords = {r: _coords(simple, r) for r in roots}
    pos = [r for r in roots if all(c >= 0 for c in coords[r])]
    pos.sort(key=lambda r: (sum(coords[r]), tuple(-x for x in coords[r])))
    ordered = pos + [tuple(-x for x in r) for r in pos]
    return RootSystem(
        label=label,
        components=components,
        ambient_dim=ambient_dim,
        roots=tuple(ordered),
        simple_roots=tuple(simple),
        root_class=tuple(class_of(r) for r in ordered),
    )


def _irreducible(letter: str, n: int) -> RootSystem:
    d, simple = _simple_roots(letter, n)
    roots = _closure(simple)
    norms = sorted({dot(r, r) for r in roots})

    def class_of(r):
        return "short" if len(norms) == 2 and dot(r, r) == norms[0] else "long"

    return _assemble(f"{letter}{n}", ((letter, n),), d, simple, roots, class_of)


def _direct_sum(parts: Sequence[RootSystem]) -> RootSystem:
    total = sum(p.ambient_dim for p in parts)
    simple: list[Vector] = []
    roots: list[Vector] = []
    cls: dict[Vector, str] = {}
    offset = 0
    for j, p in enumerate(parts):
        pad = (ZERO,) * offset, (ZERO,) * (total - offset - p.ambient_dim)
        emb = lambda r: pad[0] + r + pad[1]  # noqa: E731
        simple += [emb(s) for s in p.simple_roots]
        for r, c in zip(p.roots, p.root_class):
            roots.append(emb(r))
            cls[emb(r)] = f"{c}@{j}"
        offset += p.ambient_dim
    comps = tuple(c for p in parts for c in p.components)
    return _assemble(
        "x".join(p.label for p in parts), comps, total, simple, roots, cls.__getitem__
    )


_LABEL = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_label(label: str) -> list[tuple[str, int]]:
    out = []
    for part in label.strip().split("x"):
        m = _LABEL.match(part.strip())
        if not m:
            raise ConfigurationError(
                f"cannot parse root system label {label!r}; valid types: "
                + ", ".join(f"{t}{min(r)}-{t}{max(r)}" for t, r in SUPPORTED_RANKS.items())
            )
        out.append((m.group(1).upper(), int(m.group(2))))
    return out


def build_root_system(type_: str, rank: int | None = None) -> RootSystem:
    """Build a root system from ``("B", 2)`` or a label such as ``"A2xA1"``."""
    parts = [(type_.upper(), rank)] if rank is not None else parse_label(type_)
    for letter, n in parts:
        if letter not in SUPPORTED_RANKS or n not in SUPPORTED_RANKS[letter]:
            valid = ", ".join(
                f"{t}{min(r)}..{t}{max(r)}" if len(r) > 1 else f"{t}{r[0]}"
                for t, r in SUPPORTED_RANKS.items()
            )
            raise ConfigurationError(f"unsupported type {letter}{n}; valid types: {valid}")
    systems = [_irreducible(letter, n) for letter, n in parts]
    if len(systems) == 1:
        return systems[0]
    return _direct_sum(systems)


@dataclass(frozen=True)
class ParameterFunction:
    """A W_0-invariant parameter function: one rational per length class.

    ``values`` may use the wildcard ``"all"``; for products ``"long"`` and
    ``"short"`` are broadcast to every factor carrying that class.
    """

    values: tuple[tuple[str, Fraction], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, object] | None = None, **kw) -> "ParameterFunction":
        d = dict(mapping or {}, **kw)
        return cls(tuple(sorted((str(c), Fraction(v)) for c, v in d.items())))

    @classmethod
    def equal(cls, k) -> "ParameterFunction":
        return cls.of(all=k)

    def for_system(self, R: RootSystem) -> dict[str, Fraction]:
        given = dict(self.values)
        out: dict[str, Fraction] = {}
        used: set[str] = set()
        for c in R.classes:
            base = c.split("@")[0]
            for key in (c, base, "all"):
                if key in given:
                    out[c] = given[key]
                    used.add(key)
                    break
            else:
                raise ConfigurationError(
                    f"no parameter for length class {c!r} of {R.label}; "
                    f"expected keys {list(R.classes)}"
                )
        unknown = set(given) - used
        if unknown - {"all"}:
            raise ConfigurationError(
                f"unknown parameter keys {sorted(unknown)} for {R.label}; "
                f"classes are {list(R.classes)}"
            )
        return out

    def resolved(self, R: RootSystem) -> "ParameterFunction":
        return ParameterFunction.of(self.for_system(R))

    def scaled(self, c) -> "ParameterFunction":
        c = Fraction(c)
        return ParameterFunction(tuple((k, c * v) for k, v in self.values))

    def is_equal(self, R: RootSystem) -> bool:
        return len(set(self.for_system(R).values())) == 1

    def __str__(self) -> str:
        return ",".join(f"{c}={v}" for c, v in self.values)


def apply_word(R: RootSystem, word: Sequence[int], v: Sequence[Fraction]) -> Vector:
    """Apply simple reflections ``word[0]``, then ``word[1]``, ... to v."""
    v = tuple(v)
    for i in word:
        v = reflect(R.simple_roots[i], v)
    return v


def dominant_representative(R: RootSystem, v: Sequence[Fraction]) -> tuple[Vector, tuple[int, ...]]:
    """The dominant element of W_0 v and a word reaching it.

    Reflecting in a simple root with negative pairing raises the pairing
    with the sum of positive coroots, so the loop terminates.
    """
    v = tuple(Fraction(x) for x in v)
    word = []
    while True:
        for i, a in enumerate(R.simple_roots):
            if dot(a, v) < 0:
                v = reflect(a, v)
                word.append(i)
                break
        else:
            return v, tuple(word)


def is_dominant(R: RootSystem, v: Sequence[Fraction]) -> bool:
    return all(dot(a, v) >= 0 for a in R.simple_roots)


def same_orbit(R: RootSystem, v: Sequence[Fraction], w: Sequence[Fraction]) -> bool:
    return dominant_representative(R, v)[0] == dominant_representative(R, w)[0]


def orbit(R: RootSystem, v: Sequence[Fraction], cap: int = DEFAULT_ORBIT_CAP) -> set[Vector]:
    start = tuple(Fraction(x) for x in v)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for a in R.simple_roots:
            t = reflect(a, u)
            if t not in seen:
                seen.add(t)
                if len(seen) > cap:
                    raise ResourceLimitError(f"orbit larger than cap {cap}", partial=len(seen))
                queue.append(t)
    return seen


def orbit_size(R: RootSystem, v: Sequence[Fraction], cap: int = DEFAULT_ORBIT_CAP) -> int:
    return len(orbit(R, v, cap))


def identify_type(R_like_roots: Sequence[Vector], simple: Sequence[Vector]) -> tuple[tuple[str, int], ...]:
    """Cartan type of the root system with given roots and base."""
    if not simple:
        return ()
    n = len(simple)
    adj = {i: [j for j in range(n) if j != i and dot(simple[i], simple[j])] for i in range(n)}
    comp_of = [-1] * n
    comps: list[list[int]] = []
    for i in range(n):
        if comp_of[i] >= 0:
            continue
        stack, members = [i], []
        comp_of[i] = len(comps)
        while stack:
            j = stack.pop()
            members.append(j)
            for t in adj[j]:
                if comp_of[t] < 0:
                    comp_of[t] = len(comps)
                    stack.append(t)
        comps.append(sorted(members))
    per_comp: list[list[Vector]] = [[] for _ in comps]
    for r in R_like_roots:
        c = _coords(simple, r)
        support = {comp_of[i] for i, x in enumerate(c) if x}
        per_comp[support.pop()].append(r)
    out = []
    for members, roots in zip(comps, per_comp):
        m, N = len(members), len(roots)
        norms = sorted({dot(r, r) for r in roots})
        if len(norms) == 1:
            if N == m * (m + 1):
                letter = "A"
            elif N == 2 * m * (m - 1):
                letter = "D"
            else:
                letter = "E"
        elif m == 2 and N == 12:
            letter = "G"
        elif m == 4 and N == 48:
            letter = "F"
        else:
            short = sum(1 for r in roots if dot(r, r) == norms[0])
            letter = "B" if short == 2 * m else "C"
        out.append((letter, m))
    return tuple(sorted(out, key=lambda t: (t[0], -t[1])))


def type_label(components: Sequence[tuple[str, int]]) -> str:
    return "x".join(f"{t}{n}" for t, n in components) or "trivial"


def parabolic_subsystem(R: RootSystem, direction: Sequence[Vector]) -> "Subsystem":
    """Roots constant along every vector of ``direction`` (the system R_L)."""
    idx = tuple(
        i for i, r in enumerate(R.roots) if all(not dot(r, d) for d in direction)
    )
    return Subsystem.from_indices(R, idx)


@dataclass(frozen=True)
class Subsystem:
    """A root subsystem of ``parent`` given by root indices.

    The positive system is inherited from the parent; the base consists of
    the inherited positive roots that are not sums of two others.
    """

    parent: RootSystem
    indices: tuple[int, ...]
    system: RootSystem = field(compare=False)

    @classmethod
    def from_indices(cls, R: RootSystem, idx: Sequence[int]) -> "Subsystem":
        idx = tuple(sorted(idx))
        pos = [R.roots[i] for i in idx if i < R.npos]
        posset = set(pos)
        simple = [
            r for r in pos
            if not any(tuple(a - b for a, b in zip(r, s)) in posset for s in pos)
        ]
        comps = identify_type([R.roots[i] for i in idx], simple)
        system = RootSystem(
            label=type_label(comps),
            components=comps,
            ambient_dim=R.ambient_dim,
            roots=tuple(pos) + tuple(tuple(-x for x in r) for r in pos),
            simple_roots=tuple(simple),
            root_class=tuple(R.root_class[R.index[r]] for r in pos)
            + tuple(R.root_class[R.index[tuple(-x for x in r)]] for r in pos),
        )
        return cls(R, idx, system)

    @property
    def roots(self) -> tuple[Vector, ...]:
        return tuple(self.parent.roots[i] for i in self.indices)

    @property
    def label(self) -> str:
        return self.system.label

    def restrict(self, k: ParameterFunction) -> dict[int, Fraction]:
        """k restricted to this subsystem, keyed by parent root index."""
        kv = self.parent.kvals(k)
        return {i: kv[i] for i in self.indices}

    def __len__(self) -> int:
        return len(self.indices)


WEYL_ORDERS = {
    "A": lambda n: _fact(n + 1),
    "B": lambda n: 2**n * _fact(n),
    "C": lambda n: 2**n * _fact(n),
    "D": lambda n: 2 ** (n - 1) * _fact(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def weyl_group_order(R: RootSystem) -> int:
    out = 1
    for letter, n in R.components:
        out *= WEYL_ORDERS[letter](n)
    return out

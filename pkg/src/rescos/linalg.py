"""Small exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`. Everything here is
written for the tiny dimensions of root systems (at most 9 columns), so
plain Python loops beat any clever representation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    s = ZERO
    for a, b in zip(x, y):
        if a and b:
            s += a * b
    return s


def add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def is_zero(x: Sequence[Fraction]) -> bool:
    return not any(x)


def rref(rows: Iterable[Sequence[Fraction]], ncols: int | None = None):
    """Reduced row echelon form of an augmented or plain matrix.

    Returns ``(rows, pivots)`` where ``rows`` has no zero rows, every
    pivot entry is 1 and every pivot column is otherwise zero.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    width = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Iterable[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence[Fraction]], n: int) -> list[Vector]:
    """Basis of ``{x : r.x = 0 for r in rows}`` read off the RREF."""
    red, pivots = rref(rows, n) if rows else ([], [])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """Unique solution of a square nonsingular system, else None."""
    n = len(a)
    aug = [tuple(row) + (rhs,) for row, rhs in zip(a, b)]
    red, pivots = rref(aug, n)
    if len(pivots) < n:
        return None
    return tuple(row[n] for row in red)


def inverse(a: Sequence[Sequence[Fraction]]) -> list[Vector]:
    n = len(a)
    aug = [tuple(row) + tuple(ONE if i == j else ZERO for j in range(n))
           for i, row in enumerate(a)]
    red, pivots = rref(aug, n)
    if len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def fmt(x: Fraction) -> str:
    return str(x)


def parse(s: str | int | Fraction) -> Fraction:
    return Fraction(s)

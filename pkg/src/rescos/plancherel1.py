"""Rank-one residue calculus for the trace of the A_1 affine Hecke algebra.

Realization: X is the root lattice, T = C^*, alpha(t) = t. The density
against the normalized angular measure dt = dz / (2 pi i z) is

    eta(t) = q^-1 (1 - t^-1)(1 - t) / ((1 - q^-1 t^-1)(1 - q^-1 t)),

with poles at t = q^-1 and t = q. Integrating over a small circle gives
tau(1) = 1; moving the contour out to |t| = 1 crosses the residual point
min(q, q^-1), whose residue becomes a point mass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
import sympy as sp

from .errors import ContourError

TOL = 1e-10
MAX_NODES = 2**22


def as_number(q) -> Fraction | float:
    """Parse q from "p/q", a decimal string, or a number."""
    if isinstance(q, str):
        try:
            return Fraction(q)
        except ValueError:
            return float(q)
    if isinstance(q, int):
        return Fraction(q)
    return q


def eta(q, t):
    """The density eta at complex t (vectorized)."""
    q = float(q)
    t = np.asarray(t, dtype=complex)
    if q == 1:
        # the factors cancel identically; only a removable 0/0 at t = 1 remains
        return np.ones_like(t)
    return q * (t - 1) * (1 - t) / ((q * t - 1) * (q - t))


def circle_mean(fn, center: complex, radius: float, tol: float = TOL) -> complex:
    """Mean of fn over a circle by the trapezoidal rule, doubling nodes.

    For functions analytic in an annulus around the circle the error decays
    geometrically, so agreement of successive refinements is a sound stop.
    """
    n = 64
    prev = None
    while n <= MAX_NODES:
        theta = 2 * np.pi * np.arange(n) / n
        val = np.mean(fn(center + radius * np.exp(1j * theta)))
        if prev is not None and abs(val - prev) < tol / 10:
            return complex(val)
        prev = val
        n *= 2
    raise ContourError(f"quadrature did not converge on |t - {center}| = {radius}")


def _pole_radii(q) -> list[float]:
    q = float(q)
    return [] if q == 1 else [1 / q, q]


def trace_of_one(q, p: float, tol: float = TOL) -> float:
    """The integral of eta over |t| = p, which should equal tau(1) = 1."""
    q = float(as_number(q))
    if q <= 0:
        raise ContourError("q must be positive")
    limit = min([1.0] + _pole_radii(q))
    if not 0 < p < limit:
        raise ContourError(f"radius {p} must lie in (0, {limit}) to stay below every pole")
    return circle_mean(lambda t: eta(q, t), 0j, p, tol).real


def residue_numeric(q, t0: float, tol: float = TOL) -> float:
    """Residue of eta(z)/z at t0 by quadrature on a small circle."""
    others = [0.0, 1.0] + [r for r in _pole_radii(q) if abs(r - t0) > 1e-15]
    r = min(abs(x - t0) for x in others) / 2
    g = lambda z: eta(q, z) / z * (z - t0)  # noqa: E731
    return circle_mean(g, complex(t0), r, tol).real


def residue_symbolic(q) -> sp.Expr:
    """Exact residue of eta(z)/z at the pole inside the unit circle (q != 1).

    Decimal q is read exactly from its shortest repr.
    """
    qq = sp.Rational(q.numerator, q.denominator) if isinstance(q, Fraction) else sp.Rational(repr(float(q)))
    tt = 1 / qq if qq > 1 else qq
    z = sp.Symbol("z")
    f = (1 / qq) * (1 - 1 / z) * (1 - z) / ((1 - 1 / (qq * z)) * (1 - z / qq)) / z
    return sp.nsimplify(sp.residue(sp.cancel(f), z, tt))


def point_mass_closed_form(q) -> Fraction | float:
    """|q - 1| / (q + 1): minus the residue at the crossed pole."""
    return abs(q - 1) / (q + 1)


@dataclass
class RankOneSpectrum:
    q: Fraction | float
    point_masses: list[tuple[float, float]]
    continuous_total: float
    density_samples: list[tuple[float, float]] = field(repr=False)
    mass_symbolic: Fraction | None = None

    @property
    def total(self) -> float:
        return sum(m for _, m in self.point_masses) + self.continuous_total

    def to_json(self) -> dict:
        q = self.q
        label = "q^-1" if q > 1 else "q"
        return {
            "q": str(q),
            "point_masses": [
                {"t": label, "t_value": t, "orbit": [t, 1 / t], "mass": m} for t, m in self.point_masses
            ],
            "continuous_total": self.continuous_total,
            "density": [[a, v] for a, v in self.density_samples],
            "total": self.total,
        }


def density_on_circle(q, n: int = 2**10) -> list[tuple[float, float]]:
    theta = 2 * np.pi * np.arange(n) / n
    vals = eta(q, np.exp(1j * theta))
    return [(float(a), float(v.real)) for a, v in zip(theta, vals)]


def decompose(q, n_samples: int = 2**10, tol: float = TOL) -> RankOneSpectrum:
    """Split tau on A into a point mass at the residual orbit and a density on |t| = 1.

    The point mass is taken both numerically and symbolically and the two
    must agree; the total must reproduce tau(1) = 1.
    """
    q = as_number(q)
    if q <= 0:
        raise ContourError("q must be positive")
    continuous = circle_mean(lambda t: eta(q, t), 0j, 1.0, tol).real
    samples = density_on_circle(q, n_samples)
    if q == 1:
        spectrum = RankOneSpectrum(q, [], continuous, samples)
    else:
        t0 = 1 / q if q > 1 else q
        num = -residue_numeric(q, float(t0), tol)
        exact = -residue_symbolic(q)
        if abs(num - float(exact)) > tol:
            raise ContourError(f"numeric residue {num} disagrees with exact {exact}")
        if not num > 0:
            raise ContourError(f"point mass {num} is not positive")
        sym = Fraction(int(exact.p), int(exact.q)) if exact.is_Rational else None
        spectrum = RankOneSpectrum(q, [(float(t0), num)], continuous, samples, sym)
    p = 0.5 * min([1.0] + _pole_radii(q))
    small = trace_of_one(q, p, tol)
    if abs(spectrum.total - small) > tol or abs(spectrum.total - 1) > tol:
        raise ContourError(f"decomposition total {spectrum.total} differs from tau(1) = {small}")
    return spectrum


def cross_check_support(spectrum: RankOneSpectrum, table) -> bool:
    """Match the spectrum with an A_1 residual table computed at k ~ log q.

    The table parameter k only has to share the sign of log q (zero when
    q = 1); residual points v map to t = exp(alpha(v) log q / k).
    """
    R = table.system
    if len(R.roots) != 2:
        raise ValueError("cross-check is for A_1 tables")
    k = next(iter(table.params.for_system(R).values()))
    q = float(spectrum.q)
    logq = math.log(q)
    if (k == 0) != (abs(logq) < 1e-15) or (k != 0 and (k > 0) != (logq > 0)):
        return False
    dims = sorted(e.dim for e in table.orbits)
    if not spectrum.point_masses:
        return dims == [1]
    if dims != [0, 1]:
        return False
    alpha = R.roots[0]
    locs = {
        math.exp(float(sum(a * x for a, x in zip(alpha, c.center))) * logq / float(k))
        for c in table.points
    }
    return all(any(abs(t - s) < 1e-9 for s in locs) and any(abs(1 / t - s) < 1e-9 for s in locs)
               for t, _ in spectrum.point_masses) and len(locs) == 2

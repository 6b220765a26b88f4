"""Closed-form spectra of the bounded composition operators.

Every bounded case has an explicit spectrum: parabolic maps give the
closure of the curve exp(i*shift*t) for t >= 0 (the unit circle for real
shift, a logarithmic spiral joined with 0 otherwise); hyperbolic maps
give a circle (automorphisms) or a closed disc (non-automorphisms) of
radius determined by the slope and the space weight.  The essential
spectrum coincides with the spectrum in all cases, so a single
constructor serves both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .maps import LFTMap, classify
from .spaces import SpaceParams


@dataclass(frozen=True)
class Circle:
    """The circle of the given radius centred at the origin."""

    radius: float

    def max_modulus(self) -> float:
        return self.radius

    def contains(self, lam: complex, tol: float = 1e-9) -> bool:
        return abs(abs(lam) - self.radius) <= tol

    def distance(self, lam: complex) -> float:
        return abs(abs(lam) - self.radius)

    def sample(self, n: int) -> list[complex]:
        if n < 1:
            raise ValueError("need at least one sample")
        return [self.radius * np.exp(2j * math.pi * k / n) for k in range(n)]


@dataclass(frozen=True)
class ClosedDisc:
    """The closed disc of the given radius centred at the origin."""

    radius: float

    def max_modulus(self) -> float:
        return self.radius

    def contains(self, lam: complex, tol: float = 1e-9) -> bool:
        return abs(lam) <= self.radius + tol

    def distance(self, lam: complex) -> float:
        return max(0.0, abs(lam) - self.radius)

    def sample(self, n: int) -> list[complex]:
        """Deterministic samples: the boundary point at angle 0 first,
        then the origin, then alternating boundary and interior points."""
        if n < 1:
            raise ValueError("need at least one sample")
        points = [complex(self.radius)]
        if n == 1:
            return points
        points.append(0j)
        extras = n - 2
        n_boundary = (extras + 1) // 2
        n_interior = extras - n_boundary
        for j in range(n_boundary):
            points.append(self.radius * np.exp(2j * math.pi * (j + 1) / (n_boundary + 1)))
        for j in range(n_interior):
            rho = self.radius * (j + 1) / (n_interior + 1)
            points.append(rho * np.exp(2j * math.pi * 0.381966011 * (j + 1)))
        return points


@dataclass(frozen=True)
class ParabolicArcClosure:
    """Closure of {exp(i*shift*t) : t >= 0}.

    The unit circle when the shift is real; otherwise a logarithmic
    spiral from 1 to 0, together with the point 0, degenerating to the
    segment [0, 1] for purely imaginary shift.
    """

    shift: complex

    def __post_init__(self):
        if self.shift == 0.0 or np.imag(self.shift) < 0.0:
            raise ValueError("shift must be a nonzero point of the closed "
                             "upper half-plane")

    def max_modulus(self) -> float:
        return 1.0

    def contains(self, lam: complex, tol: float = 1e-9) -> bool:
        v = np.imag(self.shift)
        if v == 0.0:
            return abs(abs(lam) - 1.0) <= tol
        r = abs(lam)
        if r <= tol:
            return True
        t_star = -math.log(r) / v
        if t_star < -tol:
            return False
        residual = np.angle(lam) - np.real(self.shift) * t_star
        residual = (residual + math.pi) % (2.0 * math.pi) - math.pi
        return abs(residual) <= tol * (1.0 + abs(self.shift))

    def distance(self, lam: complex) -> float:
        v = np.imag(self.shift)
        if v == 0.0:
            return abs(abs(lam) - 1.0)
        t_cap = -math.log(1e-14) / v
        grid = np.linspace(0.0, t_cap, 4001)
        best = min(abs(lam), self._nearest(lam, grid))
        # two local refinements around the best curve parameter
        step = grid[1] - grid[0]
        t0 = grid[int(np.argmin(np.abs(lam - np.exp(1j * self.shift * grid))))]
        for _ in range(2):
            local = np.linspace(max(0.0, t0 - step), t0 + step, 201)
            t0 = local[int(np.argmin(np.abs(lam - np.exp(1j * self.shift * local))))]
            best = min(best, abs(lam - np.exp(1j * self.shift * t0)))
            step = local[1] - local[0]
        return float(best)

    def _nearest(self, lam: complex, grid: np.ndarray) -> float:
        return float(np.min(np.abs(lam - np.exp(1j * self.shift * grid))))

    def sample(self, n: int) -> list[complex]:
        if n < 1:
            raise ValueError("need at least one sample")
        v = np.imag(self.shift)
        if v == 0.0:
            return Circle(1.0).sample(n)
        if n == 1:
            return [1.0 + 0.0j]
        t_max = -math.log(1e-13) / v
        ts = np.linspace(0.0, t_max, n - 1)
        points = [complex(np.exp(1j * self.shift * t)) for t in ts]
        points.append(0j)
        return points


SpectralSet = Circle | ClosedDisc | ParabolicArcClosure


def _hyperbolic_radius(space: SpaceParams, mu: float) -> float:
    base = mu ** (-(space.alpha + 2.0) / 2.0)
    if space.is_dirichlet:
        return mu * base
    return base


def spectrum(space: SpaceParams, m: LFTMap, essential: bool = False) -> SpectralSet:
    """Spectrum (equivalently essential spectrum) of the composition
    operator of ``m`` on ``space``.

    The essential spectrum coincides with the spectrum in every bounded
    case, so the flag only documents intent.
    """
    del essential
    classify(m)  # validates; raises for the identity
    if m.is_parabolic:
        return ParabolicArcClosure(m.shift)
    radius = _hyperbolic_radius(space, m.mu)
    if m.is_automorphism:
        return Circle(radius)
    return ClosedDisc(radius)


def spectral_radius(space: SpaceParams, m: LFTMap) -> float:
    """Spectral radius, equal to the operator and essential norms.

    (1/mu)**((alpha+2)/2) on Hardy/Bergman, with an extra factor mu on
    the Dirichlet scale; always the maximal modulus of the spectrum.
    """
    classify(m)
    if m.is_parabolic:
        return 1.0
    return _hyperbolic_radius(space, m.mu)


def contains(s: SpectralSet, lam: complex, tol: float = 1e-9) -> bool:
    return s.contains(lam, tol)


def distance(s: SpectralSet, lam: complex) -> float:
    return s.distance(lam)


def sample_set(s: SpectralSet, n: int) -> list[complex]:
    return s.sample(n)

"""Fourier-side model of the half-plane spaces.

Every space in scope is isometric to a weighted L^2 space on the
positive half-line: analytic functions arise as Laplace-type syntheses
F(w) = integral of f(t) exp(iwt) over t > 0, and the space norm equals a
constant times the integral of |f(t)|^2 t**(-beta).  This module holds
the density family, closed-form synthesis and norms, and the exact
density/analytic pairs used to exercise the isometry numerically.

Densities are stored as t**p * exp(rate*t) with Re rate <= 0 on a
sub-interval of (0, inf); indicators are the p = 0, rate = 0 case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import gammainc

from .errors import NonConvergentError, NotInSpaceError
from .functions import InversePower, Kernel
from .quadrature import QuadResult, integrate_halfline, panel_rule, weight_integral
from .spaces import NormalizationConstants, SpaceParams, cpow


# ---------------------------------------------------------------------------
# density family

@dataclass(frozen=True)
class PowerExp:
    """f(t) = coefficient * t**power * exp(rate*t) on ``support``."""

    coefficient: complex
    power: float
    rate: complex
    support: tuple[float, float] = (0.0, math.inf)

    def __post_init__(self):
        a, b = self.support
        if not (0.0 <= a < b):
            raise ValueError("support must satisfy 0 <= a < b")
        if np.real(self.rate) > 0.0:
            raise ValueError("rate must have non-positive real part")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        a, b = self.support
        inside = (t >= a) & (t <= b)
        out = np.zeros(t.shape, dtype=complex)
        ts = t[inside]
        out[inside] = self.coefficient * ts**self.power * np.exp(self.rate * ts)
        return out

    def __mul__(self, scalar):
        return replace(self, coefficient=self.coefficient * complex(scalar))

    __rmul__ = __mul__

    def __add__(self, other):
        return DensitySum.of(self, other)


def indicator(a: float, b: float) -> PowerExp:
    """Characteristic function of [a, b], 0 <= a < b < inf."""
    if not math.isfinite(b):
        raise ValueError("indicator requires a finite interval")
    return PowerExp(1.0 + 0.0j, 0.0, 0.0 + 0.0j, (float(a), float(b)))


@dataclass(frozen=True)
class LogOscillation:
    """f(x) = coefficient * x**exponent * exp(-i*phase*log_mu(x)) on a
    finite interval; the oscillation is unimodular so norms only see the
    power part."""

    coefficient: complex
    exponent: float
    mu: float
    phase: float
    support: tuple[float, float]

    def __post_init__(self):
        a, b = self.support
        if not (0.0 < a < b < math.inf):
            raise ValueError("support must be a finite interval inside (0, inf)")
        if not (self.mu > 0.0 and self.mu != 1.0):
            raise ValueError("log base mu must be positive and different from 1")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        a, b = self.support
        inside = (x >= a) & (x <= b)
        out = np.zeros(x.shape, dtype=complex)
        xs = x[inside]
        out[inside] = (self.coefficient * xs**self.exponent
                       * np.exp(-1j * self.phase * np.log(xs) / math.log(self.mu)))
        return out

    def __mul__(self, scalar):
        return replace(self, coefficient=self.coefficient * complex(scalar))

    __rmul__ = __mul__

    def __add__(self, other):
        return DensitySum.of(self, other)


@dataclass(frozen=True)
class Sampled:
    """Piecewise-constant density on consecutive bins given by ``edges``."""

    edges: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        edges = np.asarray(self.edges, dtype=float)
        if edges.ndim != 1 or len(edges) < 2 or edges[0] <= 0.0 or np.any(np.diff(edges) <= 0.0):
            raise ValueError("edges must be strictly increasing and positive")
        if len(self.values) != len(edges) - 1:
            raise ValueError("need one value per bin")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        idx = np.searchsorted(self.edges, t, side="right") - 1
        out = np.zeros(t.shape, dtype=complex)
        inside = (idx >= 0) & (idx < len(self.values))
        out[inside] = np.asarray(self.values, dtype=complex)[idx[inside]]
        return out

    def __mul__(self, scalar):
        return Sampled(self.edges, np.asarray(self.values) * complex(scalar))

    __rmul__ = __mul__

    def __add__(self, other):
        return DensitySum.of(self, other)


@dataclass(frozen=True)
class DensitySum:
    members: tuple

    @staticmethod
    def of(*densities) -> "DensitySum":
        members = []
        for f in densities:
            members.extend(f.members if isinstance(f, DensitySum) else [f])
        return DensitySum(tuple(members))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return sum(f(t) for f in self.members)

    def __mul__(self, scalar):
        return DensitySum(tuple(f * scalar for f in self.members))

    __rmul__ = __mul__

    def __add__(self, other):
        return DensitySum.of(self, other)


# ---------------------------------------------------------------------------
# membership and norms

def in_weighted_l2(f, beta: float) -> bool:
    """Symbolic membership test for the t**(-beta)-weighted L^2 space."""
    if isinstance(f, DensitySum):
        return all(in_weighted_l2(g, beta) for g in f.members)
    if isinstance(f, (LogOscillation, Sampled)):
        return True
    if isinstance(f, PowerExp):
        a, b = f.support
        if a == 0.0 and not 2.0 * f.power - beta > -1.0:
            return False
        if math.isinf(b) and np.real(f.rate) >= 0.0 and not 2.0 * f.power - beta < -1.0:
            return False
        return True
    raise TypeError(f"unknown density {type(f).__name__}")


def density_norm(space: SpaceParams, f) -> float:
    """Norm of a density in the Fourier-side model of ``space``.

    Equals the space norm of the synthesized analytic function.  Exact
    closed forms are used for single-term densities; sums fall back to
    adaptive half-line quadrature.
    """
    beta = space.fourier_weight_exponent()
    if not in_weighted_l2(f, beta):
        raise NotInSpaceError(
            f"density is not square integrable against t**(-{beta})")
    b_const = space.pw_norm_constant()
    return math.sqrt(b_const * _weighted_square_integral(f, beta))


def _weighted_square_integral(f, beta: float) -> float:
    if isinstance(f, PowerExp):
        a, b = f.support
        s = 2.0 * f.power - beta + 1.0
        lam = -2.0 * float(np.real(f.rate))
        mag2 = abs(f.coefficient) ** 2
        if lam == 0.0:
            if math.isinf(b):
                # membership guarantees s < 0 here
                return mag2 * (-(a**s) / s)
            return mag2 * weight_integral(a, b, 1.0 - s)
        if math.isinf(b) and a == 0.0:
            return mag2 * math.gamma(s) / lam**s
        upper = 1.0 if math.isinf(b) else gammainc(s, lam * b)
        lower = gammainc(s, lam * a)
        return mag2 * math.gamma(s) / lam**s * float(upper - lower)
    if isinstance(f, LogOscillation):
        a, b = f.support
        return abs(f.coefficient) ** 2 * weight_integral(a, b, beta - 2.0 * f.exponent)
    if isinstance(f, Sampled):
        edges = np.asarray(f.edges, dtype=float)
        bins = [weight_integral(edges[j], edges[j + 1], beta) for j in range(len(edges) - 1)]
        return float(np.sum(np.abs(np.asarray(f.values)) ** 2 * np.asarray(bins)))
    if isinstance(f, DensitySum):
        supports = [getattr(g, "support", None) for g in f.members]
        if all(s is not None for s in supports):
            ordered = sorted(supports)
            disjoint = all(ordered[j][1] <= ordered[j + 1][0]
                           for j in range(len(ordered) - 1))
            if disjoint:
                # cross terms vanish, each member has an exact form
                return sum(_weighted_square_integral(g, beta) for g in f.members)
        decay = _decay_rate(f)
        res = integrate_halfline(lambda t: np.abs(f(t)) ** 2 * t**-beta,
                                 decay_rate=decay)
        return float(np.real(res.value))
    raise TypeError(f"unknown density {type(f).__name__}")


def _decay_rate(f) -> float:
    if isinstance(f, DensitySum):
        return min(_decay_rate(g) for g in f.members)
    if isinstance(f, PowerExp):
        a, b = f.support
        if math.isfinite(b):
            return 1.0  # compactly supported, any positive rate works
        rate = -2.0 * float(np.real(f.rate))
        return rate if rate > 0.0 else 1.0
    return 1.0


# ---------------------------------------------------------------------------
# synthesis

def _interval_transform(coefficient: complex, power: float, s, a: float, b: float):
    """Closed forms for the integral of c * t**power * exp(s*t) over [a, b]
    when power is a small non-negative integer; Re s < 0 allows b = inf."""
    s = np.asarray(s, dtype=complex)
    p = int(round(power))
    # antiderivative exp(s t) * sum_k (-1)^k p!/(p-k)! t^(p-k) / s^(k+1)
    def anti(t: float):
        total = np.zeros_like(s)
        for k in range(p + 1):
            fall = math.factorial(p) / math.factorial(p - k)
            total = total + (-1.0) ** k * fall * t ** (p - k) / s ** (k + 1)
        return np.exp(s * t) * total

    upper = np.zeros_like(s) if math.isinf(b) else anti(b)
    return coefficient * (upper - anti(a))


def synthesize(f, w, rtol: float = 1e-10):
    """Analytic synthesis F(w) of a half-line density at Im w > 0.

    Closed-form antiderivatives cover full-line power-exponential
    densities, integer powers on intervals and sampled densities;
    anything else integrates adaptively on its (finite) support.
    """
    w_arr = np.asarray(w, dtype=complex)
    if not np.all(np.imag(w_arr) > 0.0):
        raise ValueError("synthesis requires Im w > 0")
    result = _synthesize(f, w_arr, rtol)
    if np.isscalar(w) or np.ndim(w) == 0:
        return complex(result)
    return result


def _synthesize(f, w: np.ndarray, rtol: float):
    if isinstance(f, DensitySum):
        return sum(_synthesize(g, w, rtol) for g in f.members)
    if isinstance(f, Sampled):
        s = 1j * w
        total = np.zeros_like(w)
        edges = np.asarray(f.edges, dtype=float)
        for j, v in enumerate(np.asarray(f.values, dtype=complex)):
            if v != 0.0:
                total = total + v * (np.exp(s * edges[j + 1]) - np.exp(s * edges[j])) / s
        return total
    if isinstance(f, PowerExp):
        a, b = f.support
        s = f.rate + 1j * w
        if a == 0.0 and math.isinf(b):
            if f.power <= -1.0:
                raise NonConvergentError("full-line synthesis needs power > -1")
            # integral of t**p exp(s t) = Gamma(p+1) * (-s)**-(p+1), Re s < 0
            return f.coefficient * math.gamma(f.power + 1.0) * cpow(-s, -(f.power + 1.0))
        if float(f.power).is_integer() and f.power >= 0.0:
            return _interval_transform(f.coefficient, f.power, s, a, b)
    # adaptive fallback on the support
    return _synthesize_quadrature(f, w, rtol)


def _synthesize_quadrature(f, w: np.ndarray, rtol: float):
    a, b = f.support
    if math.isinf(b):
        raise NonConvergentError("no closed form and unbounded support")
    out = np.zeros_like(w)
    flat = out.reshape(-1)
    wf = w.reshape(-1)
    for idx, wi in enumerate(wf):
        osc = abs(wi) + abs(np.imag(getattr(f, "rate", 0.0)))
        width = min(b - a, 1.0 / (1.0 + osc))
        t, wt = panel_rule(a, b, width, 16)
        flat[idx] = np.sum(f(t) * np.exp(1j * wi * t) * wt)
    return out


# ---------------------------------------------------------------------------
# exact density/analytic pairs

def kernel_density(space: SpaceParams, w0: complex) -> PowerExp:
    """Half-line density whose synthesis is the reproducing kernel at w0.

    Proportional to t**(alpha+1) exp(-i conj(w0) t); the constant is
    computed from the kernel normalization via the Gamma function, not
    hard-coded.
    """
    space.require_kernel_support()
    if np.imag(w0) <= 0.0:
        raise ValueError("kernel base point must lie in the upper half-plane")
    a = space.alpha
    consts = NormalizationConstants.corrected(space)
    coeff = consts.k / (math.gamma(a + 2.0) * complex(cpow(1j, a + 2.0)))
    return PowerExp(complex(coeff), a + 1.0, -1j * complex(np.conj(w0)))


def analytic_form(f: PowerExp) -> InversePower:
    """Closed-form synthesis of a full-line power-exponential density.

    F(w) = coeff * Gamma(p+1) * i**(p+1) * (w - i*rate)**-(p+1); the pole
    i*rate lies in the closed lower half-plane because Re rate <= 0.
    """
    a, b = f.support
    if not (a == 0.0 and math.isinf(b)):
        raise ValueError("closed-form synthesis requires full half-line support")
    p = f.power
    coeff = f.coefficient * math.gamma(p + 1.0) * complex(cpow(1j, p + 1.0))
    return InversePower(complex(coeff), 1j * complex(f.rate), p + 1.0)


@dataclass(frozen=True)
class SynthesizedFunction:
    """Half-plane function defined as the synthesis of a density.

    Completes the closed-form family: evaluation goes through
    :func:`synthesize`, membership through the Fourier-side test.
    """

    density: object

    def __call__(self, w):
        return synthesize(self.density, w)

    def __mul__(self, scalar):
        return SynthesizedFunction(self.density * complex(scalar))

    __rmul__ = __mul__

    def poles(self) -> list[complex]:
        f = self.density
        if isinstance(f, PowerExp) and f.support[0] == 0.0 and math.isinf(f.support[1]):
            return [1j * complex(f.rate)]
        return []

    def min_real_exponent(self) -> float:
        f = self.density
        if isinstance(f, PowerExp) and math.isinf(f.support[1]):
            return f.power + 1.0
        return 1.0

    def check_membership(self, space: SpaceParams) -> None:
        if not in_weighted_l2(self.density, space.fourier_weight_exponent()):
            raise NonConvergentError("density of the synthesized function is "
                                     "not in the weighted L^2 space")


@dataclass(frozen=True)
class IsometryPair:
    label: str
    density: PowerExp
    analytic: object


def exact_pairs(space: SpaceParams) -> list[IsometryPair]:
    """Built-in table of (density, analytic form) pairs for ``space``."""
    space.require_kernel_support()
    a = space.alpha
    pairs: list[IsometryPair] = []
    for w0 in (1j, 2j, 1.0 + 1j, -2.0 + 0.5j):
        pairs.append(IsometryPair(f"kernel@{w0}", kernel_density(space, w0),
                                  Kernel(space, w0)))
    powers = [a / 2.0 + delta for delta in (0.3, 0.75, 1.5, 2.5)]
    sigmas = [0.5, 1.0, 2.0, 1.0]
    for p, sigma in zip(powers, sigmas):
        density = PowerExp(1.0 + 0.0j, p, complex(-sigma))
        pairs.append(IsometryPair(f"power p={p:.2f} sigma={sigma}", density,
                                  analytic_form(density)))
    oscillating = PowerExp(0.5 + 0.25j, a / 2.0 + 1.0, complex(-1.0, -0.5))
    pairs.append(IsometryPair("oscillating rate", oscillating,
                              analytic_form(oscillating)))
    mixed = PowerExp(1.0 - 0.5j, a / 2.0 + 2.0, complex(-0.75, 1.5))
    pairs.append(IsometryPair("mixed rate", mixed, analytic_form(mixed)))
    return pairs


@dataclass(frozen=True)
class IsometryReport:
    label: str
    lhs: float
    rhs: float
    relative_error: float


def isometry_report(space: SpaceParams, pair: IsometryPair,
                    rtol: float = 1e-7) -> IsometryReport:
    """Compare the Fourier-side norm with the quadrature space norm."""
    from .functions import norm as space_norm

    lhs = density_norm(space, pair.density)
    rhs = float(space_norm(space, pair.analytic, rtol=rtol).value)
    rel = abs(lhs - rhs) / max(abs(rhs), 1e-300)
    return IsometryReport(pair.label, lhs, rhs, rel)

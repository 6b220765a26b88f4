"""Affine self-maps of the upper half-plane and their operator descriptors.

The linear fractional transformations inducing bounded composition
operators on the half-plane spaces are exactly the affine maps
w -> mu*w + shift with mu > 0 and Im shift >= 0 (they fix infinity).
This module classifies them, reduces them to canonical forms by
conjugation with automorphisms, and attaches the Fourier-side operator
descriptor (a multiplication for translations, a scaled dilation for
pure dilations) together with the adjoint relation for the contracting
normal form.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple

import numpy as np

from . import fourier
from .errors import IdentityMapError, NotBoundedError, NotCanonicalError, \
    NotClosedError, NotSelfMapError, WrongFormError
from .functions import FunctionSum, InversePower, Kernel
from .spaces import SpaceParams, cpow


@dataclass(frozen=True)
class LFTMap:
    """The affine self-map w -> mu*w + shift of the upper half-plane.

    mu must be positive and Im shift non-negative.  The identity is
    rejected except when ``allow_identity`` is set, which is used for
    conjugators (automorphisms produced by :func:`normalize_conjugation`
    may be trivial).
    """

    mu: float
    shift: complex
    allow_identity: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        mu = self.mu
        if isinstance(mu, complex):
            if mu.imag != 0.0:
                raise NotSelfMapError("slope mu must be a real number")
            mu = mu.real
        mu = float(mu)
        if not mu > 0.0:
            raise NotSelfMapError("slope mu must be positive")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "shift", complex(self.shift))
        if self.shift.imag < 0.0:
            raise NotSelfMapError("Im shift < 0 leaves the upper half-plane")
        if self.is_identity and not self.allow_identity:
            raise IdentityMapError("the identity map is excluded")

    @staticmethod
    def from_coefficients(a: complex, b: complex, c: complex, d: complex) -> "LFTMap":
        """Reduce a general (a*w + b)/(c*w + d) to the affine form.

        Comparisons are exact: classification is part of the input, not an
        estimate, so no epsilon is applied.
        """
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        if a * d - b * c == 0:
            raise ValueError("degenerate coefficients: a*d - b*c = 0")
        if c != 0:
            raise NotBoundedError("c != 0: the map does not fix infinity")
        slope = a / d
        if slope.imag != 0.0 or slope.real <= 0.0:
            raise NotBoundedError(f"slope a/d = {slope} is not a positive real")
        return LFTMap(slope.real, b / d)

    @property
    def is_identity(self) -> bool:
        return self.mu == 1.0 and self.shift == 0.0

    @property
    def is_parabolic(self) -> bool:
        return self.mu == 1.0

    @property
    def is_automorphism(self) -> bool:
        return self.shift.imag == 0.0

    def __call__(self, w):
        return self.mu * np.asarray(w, dtype=complex) + self.shift

    def compose(self, other: "LFTMap") -> "LFTMap":
        """self after other, exact in (mu, shift) arithmetic."""
        return LFTMap(self.mu * other.mu, self.mu * other.shift + self.shift,
                      allow_identity=True)

    def inverse(self) -> "LFTMap":
        """Inverse map; a self-map of the half-plane only for automorphisms."""
        return LFTMap(1.0 / self.mu, -self.shift / self.mu,
                      allow_identity=self.allow_identity)


class MapKind(enum.Enum):
    PARABOLIC_AUTOMORPHISM = "parabolic_automorphism"
    PARABOLIC_NON_AUTOMORPHISM = "parabolic_non_automorphism"
    HYPERBOLIC_AUTOMORPHISM = "hyperbolic_automorphism"
    HYPERBOLIC_NON_AUTOMORPHISM = "hyperbolic_non_automorphism"


@dataclass(frozen=True)
class MapClassification:
    """Class of the map plus fixed-point data.

    Infinity is always fixed.  Parabolic maps have no finite fixed point
    and derivative 1 at infinity, so the attraction labels are None; for
    hyperbolic maps the derivative at the finite fixed point is mu and
    the two labels are reciprocal.
    """

    kind: MapKind
    finite_fixed_point: complex | None
    finite_attractive: bool | None
    infinity_attractive: bool | None


def classify(m: LFTMap) -> MapClassification:
    """Classify a valid map and report its fixed points."""
    if m.is_identity:
        raise IdentityMapError("the identity map has no classification here")
    if m.is_parabolic:
        kind = (MapKind.PARABOLIC_AUTOMORPHISM if m.is_automorphism
                else MapKind.PARABOLIC_NON_AUTOMORPHISM)
        return MapClassification(kind, None, None, None)
    fixed = m.shift / (1.0 - m.mu)
    kind = (MapKind.HYPERBOLIC_AUTOMORPHISM if m.is_automorphism
            else MapKind.HYPERBOLIC_NON_AUTOMORPHISM)
    return MapClassification(kind, fixed, m.mu < 1.0, m.mu > 1.0)


def angular_derivative_infinity(m: LFTMap) -> float:
    """Angular derivative at the fixed point infinity: 1/mu.

    Finite and positive precisely because the map is affine with positive
    slope, which is the boundedness criterion for the composition
    operators in scope.
    """
    return 1.0 / m.mu


class Normalized(NamedTuple):
    canonical: LFTMap
    conjugator: LFTMap


def normalize_conjugation(m: LFTMap) -> Normalized:
    """Reduce the map to its canonical form by an automorphism fixing
    infinity:  map = conjugator o canonical o conjugator^(-1).

    Canonical forms: translations stay unchanged; hyperbolic
    automorphisms become the pure dilation mu*w; hyperbolic
    non-automorphisms become mu*w + i*(1-mu) when contracting (mu < 1)
    and its expanding counterpart w/mu' + i*(1-mu')/mu' when mu > 1.
    """
    if m.is_identity:
        raise IdentityMapError("the identity map has no canonical form")
    identity = LFTMap(1.0, 0.0, allow_identity=True)
    if m.is_parabolic:
        return Normalized(m, identity)
    if m.is_automorphism:
        canonical = LFTMap(m.mu, 0.0)
        conjugator = LFTMap(1.0, m.shift.real / (1.0 - m.mu), allow_identity=True)
        return Normalized(canonical, conjugator)
    if m.mu > 1.0:
        canonical = LFTMap(m.mu, 1j * (m.mu - 1.0))
        slope = m.shift.imag / (m.mu - 1.0)
        offset = -m.shift.real / (m.mu - 1.0)
    else:
        canonical = LFTMap(m.mu, 1j * (1.0 - m.mu))
        slope = m.shift.imag / (1.0 - m.mu)
        offset = m.shift.real / (1.0 - m.mu)
    conjugator = LFTMap(slope, offset, allow_identity=True)
    return Normalized(canonical, conjugator)


# ---------------------------------------------------------------------------
# Fourier-side descriptors

@dataclass(frozen=True)
class Multiplication:
    """Fourier-side action of a translation: f(t) -> exp(i*shift*t) f(t)."""

    shift: complex

    def symbol(self, t):
        return np.exp(1j * self.shift * np.asarray(t, dtype=float))


@dataclass(frozen=True)
class ScaledDilation:
    """Fourier-side action of a pure dilation: f(t) -> (1/mu) f(t/mu)."""

    mu: float


FourierOpDescriptor = Multiplication | ScaledDilation


def fourier_descriptor(m: LFTMap, space: SpaceParams) -> FourierOpDescriptor:
    """Fourier-side descriptor of the composition operator.

    Only canonical translations and pure dilations have a descriptor
    here; normalize first (the spectra are conjugation invariant).  The
    space argument is kept for interface symmetry; the descriptor itself
    is space independent.
    """
    del space
    if m.is_parabolic:
        return Multiplication(m.shift)
    if m.shift == 0.0:
        return ScaledDilation(m.mu)
    raise NotCanonicalError("normalize the map first: only translations and "
                            "pure dilations act directly on the Fourier side")


def apply_descriptor(desc: FourierOpDescriptor, density):
    """Apply a Fourier-side descriptor to a half-line density, exactly."""
    if isinstance(density, fourier.DensitySum):
        return fourier.DensitySum(tuple(apply_descriptor(desc, g)
                                        for g in density.members))
    if isinstance(desc, Multiplication):
        if isinstance(density, fourier.PowerExp):
            return replace(density, rate=density.rate + 1j * desc.shift)
        raise NotClosedError("multiplication keeps only power-exponential "
                             "densities inside the family")
    if isinstance(desc, ScaledDilation):
        mu = desc.mu
        if isinstance(density, fourier.PowerExp):
            a, b = density.support
            coeff = density.coefficient * mu ** (-density.power - 1.0)
            return fourier.PowerExp(coeff, density.power, density.rate / mu,
                                    (mu * a, mu * b))
        if isinstance(density, fourier.LogOscillation):
            a, b = density.support
            twist = np.exp(1j * density.phase * math.log(mu) / math.log(density.mu))
            coeff = density.coefficient * mu ** (-density.exponent - 1.0) * twist
            return fourier.LogOscillation(complex(coeff), density.exponent,
                                          density.mu, density.phase,
                                          (mu * a, mu * b))
        raise NotClosedError("dilation keeps only power-exponential and "
                             "log-oscillation densities inside the family")
    raise TypeError(f"unknown descriptor {type(desc).__name__}")


# ---------------------------------------------------------------------------
# composition action on the closed-form family

def apply_composition(m: LFTMap, F):
    """Exact symbolic composition F o m on the closed-form family."""
    if isinstance(F, FunctionSum):
        return FunctionSum(tuple(apply_composition(m, g) for g in F.members))
    if isinstance(F, Kernel):
        # K_z(mu*w + shift) = mu**-(alpha+2) * K at the pulled-back point
        a = F.space.alpha
        scale = complex(cpow(m.mu, -(a + 2.0)))
        new_point = (F.w0 - np.conj(m.shift)) / m.mu
        return Kernel(F.space, complex(new_point), F.coefficient * scale)
    if isinstance(F, InversePower):
        scale = complex(cpow(m.mu, -F.exponent))
        new_pole = (F.pole - m.shift) / m.mu
        return InversePower(F.coefficient * scale, complex(new_pole), F.exponent)
    if isinstance(F, fourier.SynthesizedFunction):
        density = F.density
        if m.shift != 0.0:
            density = apply_descriptor(Multiplication(m.shift), density)
        if m.mu != 1.0:
            density = apply_descriptor(ScaledDilation(m.mu), density)
        return fourier.SynthesizedFunction(density)
    raise NotClosedError(f"composition does not keep {type(F).__name__} "
                         "inside the family")


def adjoint_descriptor(m: LFTMap, space: SpaceParams) -> tuple[float, LFTMap]:
    """Adjoint relation for the contracting normal form.

    For m(w) = mu*w + i*(1-mu) with mu in (0, 1) on a Hardy/Bergman
    space, the adjoint of the composition operator is
    mu**-(alpha+2) times the composition operator of the expanding
    partner w/mu + i*(1-mu)/mu.
    """
    space.require_kernel_support()
    if not (0.0 < m.mu < 1.0) or m.shift != complex(0.0, 1.0 - m.mu):
        raise WrongFormError("adjoint relation requires the exact form "
                             "mu*w + i*(1-mu) with mu in (0, 1)")
    scalar = m.mu ** -(space.alpha + 2.0)
    partner = LFTMap(1.0 / m.mu, 1j * (1.0 - m.mu) / m.mu)
    return scalar, partner

"""Function spaces on the upper half-plane and their normalizations.

Defines the three space families (Hardy, weighted Bergman, weighted
Dirichlet), the Cayley transform between the unit disc and the upper
half-plane, reproducing kernels, and the normalization constants tying
the disc picture to the half-plane picture.

Two constant sets are provided for the Bergman range: the set printed in
the literature this package follows, and a corrected set.  The printed
set presumes normalized area measure on the disc and a fixed factor 2i in
the inverse isometry; with the unnormalized disc norm used here it fails
both the kernel-positivity and the round-trip oracle (see
``verification.check_constants``).  The corrected set is the unique one
passing all oracles and is the default everywhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedSpaceError

#: Point at infinity for the Cayley maps (the only operations where it is
#: a first-class value).
INFINITY: complex = complex(math.inf, 0.0)


def cpow(base, exponent):
    """Principal-branch complex power, vectorized.

    All bases produced by this package have argument strictly inside
    (-pi, pi): half-plane kernels evaluate powers of w - conj(w0) with
    positive imaginary part, disc kernels powers of 1 - conj(z0)*z with
    positive real part.
    """
    return np.exp(np.asarray(exponent) * np.log(np.asarray(base, dtype=complex)))


class SpaceKind(enum.Enum):
    HARDY = "hardy"
    BERGMAN = "bergman"
    DIRICHLET = "dirichlet"


@dataclass(frozen=True)
class SpaceParams:
    """A space family together with its weight.

    Hardy is the alpha = -1 limit of the Bergman scale and must carry
    exactly that weight; Bergman and Dirichlet require alpha > -1.
    """

    kind: SpaceKind
    alpha: float

    def __post_init__(self):
        if self.kind is SpaceKind.HARDY:
            if self.alpha != -1.0:
                raise ValueError("Hardy space carries alpha = -1 exactly")
        elif self.alpha <= -1.0:
            raise ValueError(f"{self.kind.value} space requires alpha > -1")

    @staticmethod
    def hardy() -> "SpaceParams":
        return SpaceParams(SpaceKind.HARDY, -1.0)

    @staticmethod
    def bergman(alpha: float) -> "SpaceParams":
        return SpaceParams(SpaceKind.BERGMAN, float(alpha))

    @staticmethod
    def dirichlet(alpha: float) -> "SpaceParams":
        return SpaceParams(SpaceKind.DIRICHLET, float(alpha))

    @property
    def is_dirichlet(self) -> bool:
        return self.kind is SpaceKind.DIRICHLET

    def fourier_weight_exponent(self) -> float:
        """Exponent beta of the t**(-beta) weight on the Fourier side.

        The Dirichlet family transforms like the Bergman family at index
        alpha - 2, hence the exponent alpha - 1.
        """
        if self.kind is SpaceKind.DIRICHLET:
            return self.alpha - 1.0
        return self.alpha + 1.0

    def pw_norm_constant(self) -> float:
        """Multiplier in front of the weighted half-line norm integral."""
        a = self.alpha
        if self.kind is SpaceKind.HARDY:
            return 2.0 * math.pi
        if self.kind is SpaceKind.BERGMAN:
            return 2.0**-a * math.pi * math.gamma(a + 1.0)
        # Dirichlet constant as printed in the source material.
        return math.gamma(a + 1.0) / 2.0**a

    def require_kernel_support(self) -> None:
        if self.kind is SpaceKind.DIRICHLET:
            raise UnsupportedSpaceError(
                "reproducing kernels and the disc isometry are not defined "
                "for the Dirichlet family in this package")


@dataclass(frozen=True)
class NormalizationConstants:
    """Constants (c, d, k, b, nu) attached to a Hardy/Bergman space.

    c scales the disc-to-half-plane isometry, d its inverse, k the
    half-plane kernel, nu the disc kernel and b the Fourier-side norm.
    A consistent set satisfies c*d = (2i)**(alpha+2) (the round-trip
    condition) and produces real positive kernel diagonals.
    """

    alpha: float
    c: complex
    d: complex
    k: complex
    b: float
    nu: float | complex

    @staticmethod
    def corrected(space: SpaceParams) -> "NormalizationConstants":
        space.require_kernel_support()
        a = space.alpha
        if space.kind is SpaceKind.HARDY:
            return NormalizationConstants(
                alpha=a,
                c=1.0 / math.sqrt(math.pi),
                d=2.0j * math.sqrt(math.pi),
                k=1j / (2.0 * math.pi),
                b=2.0 * math.pi,
                nu=1.0,
            )
        i_pow = complex(cpow(1j, a + 2.0))
        nu = (a + 1.0) / math.pi
        c = 2.0 ** (a + 1.0)
        d = 2.0 * i_pow
        # k = nu * c / conj(d); for |d| real positive scaling this is
        # (alpha+1) 2**alpha i**(alpha+2) / pi.
        k = nu * c / np.conj(d)
        return NormalizationConstants(alpha=a, c=c, d=d, k=complex(k),
                                      b=space.pw_norm_constant(), nu=nu)

    @staticmethod
    def printed(space: SpaceParams) -> "NormalizationConstants":
        """The constant set as printed in the source material.

        Identical to the corrected set for Hardy; for the Bergman range it
        fails the round-trip and positivity oracles (documented in
        ``verification.check_constants``).
        """
        space.require_kernel_support()
        a = space.alpha
        if space.kind is SpaceKind.HARDY:
            return NormalizationConstants.corrected(space)
        return NormalizationConstants(
            alpha=a,
            c=2.0 ** (a + 1.0),
            d=2.0j,
            k=1j * (a + 1.0) * 2.0**a,
            b=space.pw_norm_constant(),
            nu=a + 1.0,
        )

    def roundtrip_product(self) -> complex:
        return complex(self.c * self.d)

    def roundtrip_target(self) -> complex:
        return complex(cpow(2.0j, self.alpha + 2.0))


def cayley(z):
    """Conformal map from the unit disc onto the upper half-plane.

    z = 1 maps to the explicit point at infinity; boundary points of the
    disc land on the real line.
    """
    if np.isscalar(z) or np.ndim(z) == 0:
        zc = complex(z)
        if zc == 1.0:
            return INFINITY
        return 1j * (1.0 + zc) / (1.0 - zc)
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    at_one = z == 1.0
    out[at_one] = INFINITY
    out[~at_one] = 1j * (1.0 + z[~at_one]) / (1.0 - z[~at_one])
    return out


def cayley_inverse(w):
    """Inverse of :func:`cayley`; infinity maps to 1 exactly."""
    if np.isscalar(w) or np.ndim(w) == 0:
        wc = complex(w)
        if wc == -1j:
            raise ValueError("w = -i is the pole of the inverse Cayley map")
        if not (math.isfinite(wc.real) and math.isfinite(wc.imag)):
            return 1.0 + 0.0j
        return (wc - 1j) / (wc + 1j)
    w = np.asarray(w, dtype=complex)
    out = np.empty_like(w)
    finite = np.isfinite(w.real) & np.isfinite(w.imag)
    out[~finite] = 1.0
    out[finite] = (w[finite] - 1j) / (w[finite] + 1j)
    return out


def _require_interior_halfplane(*points) -> None:
    for p in points:
        if not np.all(np.imag(p) > 0.0):
            raise ValueError("kernel evaluation requires points strictly in "
                             "the upper half-plane")


def kernel_halfplane(space: SpaceParams, w0: complex, w,
                     constants: NormalizationConstants | None = None):
    """Reproducing kernel of the half-plane space at w0, evaluated at w.

    The kernel represents point evaluation: pairing any space member
    against it returns the member's value at w0.  Dirichlet spaces are
    rejected; their kernels are outside this package's scope.
    """
    space.require_kernel_support()
    _require_interior_halfplane(w0, w)
    consts = constants if constants is not None else NormalizationConstants.corrected(space)
    return consts.k * cpow(np.asarray(w, dtype=complex) - np.conj(w0),
                           -(space.alpha + 2.0))


def kernel_disc(space: SpaceParams, z0: complex, z,
                constants: NormalizationConstants | None = None):
    """Reproducing kernel of the corresponding disc space at z0.

    Reproduces against the normalized arclength pairing for Hardy and the
    unnormalized area pairing for Bergman, which forces
    nu = (alpha+1)/pi in the corrected constants.
    """
    space.require_kernel_support()
    if not (abs(z0) < 1.0 and np.all(np.abs(z) < 1.0)):
        raise ValueError("disc kernel evaluation requires points inside the disc")
    consts = constants if constants is not None else NormalizationConstants.corrected(space)
    return consts.nu * cpow(1.0 - np.conj(z0) * np.asarray(z, dtype=complex),
                            -(space.alpha + 2.0))

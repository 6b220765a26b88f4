"""Closed-form test functions and the disc/half-plane isometry.

The half-plane family is built from inverse powers C*(w - pole)**(-e)
with poles in the closed lower half-plane, so every base stays strictly
inside the upper half-plane and principal-branch powers are safe.  The
family is closed under scalar multiples, finite sums, composition with
the affine self-maps, and the unitary identification with the disc
spaces.  Reproducing kernels are inverse powers with exponent alpha + 2
and pole at the conjugated base point.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import NonConvergentError, NotClosedError
from .quadrature import QuadResult, integrate_disc, integrate_disc_boundary, \
    integrate_halfplane, integrate_hardy_line
from .spaces import NormalizationConstants, SpaceKind, SpaceParams, cayley, \
    cayley_inverse, cpow


# ---------------------------------------------------------------------------
# half-plane family

@dataclass(frozen=True)
class InversePower:
    """F(w) = coefficient * (w - pole)**(-exponent), Im pole <= 0."""

    coefficient: complex
    pole: complex
    exponent: complex

    def __post_init__(self):
        if np.imag(self.pole) > 0.0:
            raise ValueError("pole must lie in the closed lower half-plane")

    def __call__(self, w):
        return self.coefficient * cpow(np.asarray(w, dtype=complex) - self.pole,
                                       -self.exponent)

    def __mul__(self, scalar):
        return replace(self, coefficient=self.coefficient * complex(scalar))

    __rmul__ = __mul__

    def __add__(self, other):
        return FunctionSum.of(self, other)

    def poles(self) -> list[complex]:
        return [complex(self.pole)]

    def min_real_exponent(self) -> float:
        return float(np.real(self.exponent))

    def check_membership(self, space: SpaceParams) -> None:
        _check_exponent(space, self.min_real_exponent())

    def terms(self) -> tuple["InversePower", ...]:
        return (self,)


@dataclass(frozen=True)
class Kernel:
    """Reproducing kernel of a Hardy/Bergman half-plane space at ``w0``.

    Equivalent to an :class:`InversePower` with exponent alpha + 2 and
    pole conj(w0); the corrected normalization constants are baked in.
    """

    space: SpaceParams
    w0: complex
    coefficient: complex = 1.0 + 0.0j

    def __post_init__(self):
        self.space.require_kernel_support()
        if np.imag(self.w0) <= 0.0:
            raise ValueError("kernel base point must lie in the upper half-plane")

    def as_inverse_power(self) -> InversePower:
        consts = NormalizationConstants.corrected(self.space)
        return InversePower(self.coefficient * consts.k,
                            complex(np.conj(self.w0)),
                            self.space.alpha + 2.0)

    def __call__(self, w):
        return self.as_inverse_power()(w)

    def __mul__(self, scalar):
        return replace(self, coefficient=self.coefficient * complex(scalar))

    __rmul__ = __mul__

    def __add__(self, other):
        return FunctionSum.of(self, other)

    def poles(self) -> list[complex]:
        return [complex(np.conj(self.w0))]

    def min_real_exponent(self) -> float:
        return self.space.alpha + 2.0

    def check_membership(self, space: SpaceParams) -> None:
        _check_exponent(space, self.min_real_exponent())

    def terms(self) -> tuple["Kernel", ...]:
        return (self,)


@dataclass(frozen=True)
class FunctionSum:
    """Finite sum of family members."""

    members: tuple

    @staticmethod
    def of(*functions) -> "FunctionSum":
        members = []
        for f in functions:
            members.extend(f.members if isinstance(f, FunctionSum) else [f])
        return FunctionSum(tuple(members))

    def __call__(self, w):
        w = np.asarray(w, dtype=complex)
        return sum(f(w) for f in self.members)

    def __mul__(self, scalar):
        return FunctionSum(tuple(f * scalar for f in self.members))

    __rmul__ = __mul__

    def __add__(self, other):
        return FunctionSum.of(self, other)

    def poles(self) -> list[complex]:
        return [p for f in self.members for p in f.poles()]

    def min_real_exponent(self) -> float:
        return min(f.min_real_exponent() for f in self.members)

    def check_membership(self, space: SpaceParams) -> None:
        for f in self.members:
            f.check_membership(space)

    def terms(self) -> tuple:
        return self.members


# ---------------------------------------------------------------------------
# disc family

@dataclass(frozen=True)
class DiscPower:
    """f(z) = coefficient * (1 - z)**exponent on the unit disc."""

    coefficient: complex
    exponent: complex

    def __call__(self, z):
        return self.coefficient * cpow(1.0 - np.asarray(z, dtype=complex),
                                       self.exponent)

    def __mul__(self, scalar):
        return replace(self, coefficient=self.coefficient * complex(scalar))

    __rmul__ = __mul__

    def __add__(self, other):
        return DiscSum.of(self, other)


@dataclass(frozen=True)
class DiscKernel:
    """Reproducing kernel of the corresponding disc space at ``z0``."""

    space: SpaceParams
    z0: complex
    coefficient: complex = 1.0 + 0.0j

    def __post_init__(self):
        self.space.require_kernel_support()
        if abs(self.z0) >= 1.0:
            raise ValueError("disc kernel base point must lie inside the disc")

    def __call__(self, z):
        consts = NormalizationConstants.corrected(self.space)
        return self.coefficient * consts.nu * cpow(
            1.0 - np.conj(self.z0) * np.asarray(z, dtype=complex),
            -(self.space.alpha + 2.0))

    def __mul__(self, scalar):
        return replace(self, coefficient=self.coefficient * complex(scalar))

    __rmul__ = __mul__

    def __add__(self, other):
        return DiscSum.of(self, other)


@dataclass(frozen=True)
class DiscSum:
    members: tuple

    @staticmethod
    def of(*functions) -> "DiscSum":
        members = []
        for f in functions:
            members.extend(f.members if isinstance(f, DiscSum) else [f])
        return DiscSum(tuple(members))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return sum(f(z) for f in self.members)

    def __mul__(self, scalar):
        return DiscSum(tuple(f * scalar for f in self.members))

    __rmul__ = __mul__

    def __add__(self, other):
        return DiscSum.of(self, other)


# ---------------------------------------------------------------------------
# the isometry between the disc and half-plane pictures

def disc_to_halfplane(space: SpaceParams, f,
                      constants: NormalizationConstants | None = None):
    """Image of a disc-family function under the unitary identification
    with the half-plane space.

    Pointwise this is f(cayley_inverse(w)) * c / (w + i)**(alpha+2); on
    the closed-form family the image is computed symbolically.
    """
    space.require_kernel_support()
    consts = constants if constants is not None else NormalizationConstants.corrected(space)
    a = space.alpha
    if isinstance(f, DiscSum):
        return FunctionSum.of(*(disc_to_halfplane(space, g, constants) for g in f.members))
    if isinstance(f, DiscPower):
        # (1 - cayley_inverse(w))**s = (2i)**s (w+i)**(-s), exactly in the
        # principal branch since arg(2i/(w+i)) + arg(w+i) never wraps.
        coeff = f.coefficient * cpow(2.0j, f.exponent) * consts.c
        return InversePower(complex(coeff), -1j, f.exponent + a + 2.0)
    if isinstance(f, DiscKernel):
        z0 = complex(f.z0)
        w0 = cayley(z0)
        coeff = f.coefficient * np.conj(consts.d) * cpow(1.0 - np.conj(z0), -(a + 2.0))
        return Kernel(space, complex(w0), complex(coeff))
    raise NotClosedError(f"no half-plane image for {type(f).__name__}")


def halfplane_to_disc(space: SpaceParams, F,
                      constants: NormalizationConstants | None = None):
    """Inverse of :func:`disc_to_halfplane` on the representable family."""
    space.require_kernel_support()
    consts = constants if constants is not None else NormalizationConstants.corrected(space)
    a = space.alpha
    if isinstance(F, FunctionSum):
        return DiscSum.of(*(halfplane_to_disc(space, g, constants) for g in F.members))
    if isinstance(F, Kernel):
        z0 = complex(cayley_inverse(F.w0))
        coeff = F.coefficient * cpow(1.0 - np.conj(z0), a + 2.0) / np.conj(consts.d)
        return DiscKernel(space, z0, complex(coeff))
    if isinstance(F, InversePower):
        if complex(F.pole) == -1j:
            coeff = F.coefficient * consts.d * cpow(2.0j, -F.exponent)
            return DiscPower(complex(coeff), F.exponent - (a + 2.0))
        if complex(F.exponent) == complex(a + 2.0):
            consts_k = consts.k
            kernel = Kernel(space, complex(np.conj(F.pole)),
                            complex(F.coefficient / consts_k))
            return halfplane_to_disc(space, kernel, constants)
        raise NotClosedError("inverse power with a general pole and non-kernel "
                             "exponent has no disc image in the family")
    raise NotClosedError(f"no disc image for {type(F).__name__}")


# ---------------------------------------------------------------------------
# quadrature pairings

def _check_exponent(space: SpaceParams, real_exponent: float) -> None:
    threshold = 0.5 * (space.alpha + 2.0)
    if real_exponent <= threshold:
        raise NonConvergentError(
            f"inverse-power exponent must exceed {threshold} for square "
            f"integrability against the alpha = {space.alpha} weight")


def _geometry(F, G) -> tuple[float, float]:
    reals = [p.real for p in F.poles() + G.poles()]
    if not reals:
        return 0.0, 1.0
    center = float(np.mean(reals))
    scale = max(1.0, 0.5 * (max(reals) - min(reals)))
    return center, scale


def inner_product(space: SpaceParams, F, G, rtol: float = 1e-7) -> QuadResult:
    """Numeric inner product of two family members, with error estimate.

    Hardy uses line integrals at descending heights, Bergman a weighted
    half-plane quadrature.  Square integrability is enforced symbolically
    before any quadrature runs.
    """
    space.require_kernel_support()
    F.check_membership(space)
    G.check_membership(space)
    center, scale = _geometry(F, G)

    def integrand(w):
        return F(w) * np.conj(G(w))

    if space.kind is SpaceKind.HARDY:
        return integrate_hardy_line(integrand, center=center, scale=scale, rtol=rtol)
    return integrate_halfplane(integrand, space.alpha, center=center, scale=scale,
                               rtol=rtol)


def norm(space: SpaceParams, F, rtol: float = 1e-7) -> QuadResult:
    """Numeric space norm of a family member."""
    res = inner_product(space, F, F, rtol=rtol)
    value = np.sqrt(max(np.real(res.value), 0.0))
    err = res.error / (2.0 * value) if value > 0.0 else res.error
    return QuadResult(value, err)


def _monomial_weights(space: SpaceParams, k0: int, k1: int, w_start: float) -> np.ndarray:
    """Pairing weights of z**k for k in [k0, k1), given the weight at k0.

    The monomials are orthogonal in every disc space; Hardy weights are
    identically 1, Bergman weights follow w_k = w_{k-1} * k/(k+alpha+1)
    from w_0 = pi/(alpha+1).
    """
    if space.kind is SpaceKind.HARDY:
        return np.ones(k1 - k0)
    ks = np.arange(k0, k1, dtype=float)
    ratios = np.ones(k1 - k0)
    ratios[1:] = ks[1:] / (ks[1:] + space.alpha + 1.0)
    return w_start * np.cumprod(ratios)


def _power_pairing(space: SpaceParams, s1: complex, s2: complex,
                   rtol: float = 1e-11) -> QuadResult:
    """Exact pairing of (1-z)**s1 against (1-z)**s2 by coefficient series.

    Taylor coefficients of (1-z)**s obey c_k = c_{k-1} * ((k-1)-s)/k; the
    tail beyond the summed range decays like k**-(Re s1 + Re s2 + alpha + 3)
    and is added via its integral estimate.
    """
    rate = (np.real(s1) + np.real(s2) + space.alpha + 3.0)
    if rate <= 1.0:
        raise NonConvergentError("pairing series diverges: exponents too small")
    if space.kind is SpaceKind.HARDY:
        w_next = 1.0
    else:
        w_next = math.pi / (space.alpha + 1.0)
    total = 0.0 + 0.0j
    c1_next, c2_next = 1.0 + 0.0j, 1.0 + 0.0j
    k0, block = 0, 4096
    while k0 < 2**22:
        ks = np.arange(k0, k0 + block, dtype=float)
        # c1_next already holds the coefficient at the block's first index
        f1 = np.ones(block, dtype=complex)
        f2 = np.ones(block, dtype=complex)
        f1[1:] = (ks[1:] - 1.0 - s1) / ks[1:]
        f2[1:] = (ks[1:] - 1.0 - s2) / ks[1:]
        c1 = c1_next * np.cumprod(f1)
        c2 = c2_next * np.cumprod(f2)
        weights = _monomial_weights(space, k0, k0 + block, w_next)
        terms = c1 * np.conj(c2) * weights
        total += complex(np.sum(terms))
        # integer exponents terminate; otherwise estimate the power tail
        last = abs(terms[-1])
        k_last = k0 + block - 1
        tail = last * (k_last / (rate - 1.0) + 0.5)
        if tail <= rtol * max(abs(total), 1e-300):
            return QuadResult(total + 0.0j, tail + last)
        c1_next = complex(c1[-1]) * (k_last - s1) / (k_last + 1.0)
        c2_next = complex(c2[-1]) * (k_last - s2) / (k_last + 1.0)
        if space.kind is SpaceKind.HARDY:
            w_next = 1.0
        else:
            w_next = float(weights[-1]) * (k_last + 1.0) / (k_last + space.alpha + 2.0)
        k0 += block
        block = min(2 * block, 2**19)
    raise NonConvergentError("pairing series did not reach the tolerance")


def _disc_pair_exact(space: SpaceParams, f, g):
    """Closed-form pairing for disc-family members, None when unknown.

    Kernels pair by the reproducing property, boundary powers by the
    coefficient series, sums bilinearly.
    """
    if isinstance(f, DiscSum) or isinstance(g, DiscSum):
        fs = f.members if isinstance(f, DiscSum) else (f,)
        gs = g.members if isinstance(g, DiscSum) else (g,)
        value, error = 0.0 + 0.0j, 0.0
        for fi in fs:
            for gj in gs:
                part = _disc_pair_exact(space, fi, gj)
                if part is None:
                    return None
                value += part.value
                error += part.error
        return QuadResult(value, error)
    if isinstance(g, DiscKernel):
        return QuadResult(np.conj(g.coefficient) * complex(f(g.z0)), 0.0)
    if isinstance(f, DiscKernel):
        return QuadResult(f.coefficient * np.conj(complex(g(f.z0))), 0.0)
    if isinstance(f, DiscPower) and isinstance(g, DiscPower):
        pairing = _power_pairing(space, complex(f.exponent), complex(g.exponent))
        scale = f.coefficient * np.conj(g.coefficient)
        return QuadResult(scale * pairing.value, abs(scale) * pairing.error)
    return None


def disc_inner_product(space: SpaceParams, f, g, rtol: float = 1e-7) -> QuadResult:
    """Inner product on the disc side of the identification.

    Family members pair exactly (reproducing property and coefficient
    series); anything else falls back to quadrature, which requires the
    integrand to behave at the boundary point z = 1.
    """
    space.require_kernel_support()
    exact = _disc_pair_exact(space, f, g)
    if exact is not None:
        return exact

    def integrand(z):
        return f(z) * np.conj(g(z))

    if space.kind is SpaceKind.HARDY:
        return integrate_disc_boundary(integrand, rtol=rtol)
    return integrate_disc(integrand, space.alpha, rtol=rtol)


def disc_norm(space: SpaceParams, f, rtol: float = 1e-7) -> QuadResult:
    res = disc_inner_product(space, f, f, rtol=rtol)
    value = np.sqrt(max(np.real(res.value), 0.0))
    err = res.error / (2.0 * value) if value > 0.0 else res.error
    return QuadResult(value, err)

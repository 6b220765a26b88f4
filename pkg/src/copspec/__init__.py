"""Spectra of affine composition operators on half-plane spaces.

A library and CLI computing closed-form spectra and essential spectra of
the bounded linear fractional composition operators on Hardy, weighted
Bergman and weighted Dirichlet spaces of the upper half-plane, together
with the numerical machinery (quadrature oracles, Fourier-side
truncations, decay-law checks) verifying the identities behind them.
"""

from .errors import CopspecError, GridMismatchError, IdentityMapError, \
    MembershipViolationError, NonConvergentError, NotBoundedError, \
    NotCanonicalError, NotClosedError, NotInSpaceError, NotSelfMapError, \
    UnsupportedSpaceError, WindowViolationError, WrongFormError
from .fourier import IsometryPair, IsometryReport, LogOscillation, PowerExp, \
    Sampled, SynthesizedFunction, analytic_form, density_norm, exact_pairs, \
    indicator, isometry_report, kernel_density, synthesize
from .functions import DiscKernel, DiscPower, DiscSum, FunctionSum, \
    InversePower, Kernel, disc_inner_product, disc_norm, disc_to_halfplane, \
    halfplane_to_disc, inner_product, norm
from .maps import FourierOpDescriptor, LFTMap, MapClassification, MapKind, \
    Multiplication, ScaledDilation, adjoint_descriptor, \
    angular_derivative_infinity, apply_composition, apply_descriptor, \
    classify, fourier_descriptor, normalize_conjugation
from .spaces import INFINITY, NormalizationConstants, SpaceKind, SpaceParams, \
    cayley, cayley_inverse, cpow, kernel_disc, kernel_halfplane
from .spectra import Circle, ClosedDisc, ParabolicArcClosure, SpectralSet, \
    contains, distance, sample_set, spectral_radius, spectrum
from .truncation import LogGrid, TruncatedOperator, build_truncation, \
    min_singular_grid, operator_norm_estimate, symbol_oscillation_bounds
from .verification import CheckResult, ConstantsReport, check_constants, \
    eigenfunction, eigenfunction_eigenvalue, eigenfunction_residual, \
    hyperbolic_weyl_mode, hyperbolic_weyl_ratio, parabolic_weyl_bound, \
    parabolic_weyl_ratio, run_suites

__version__ = "0.1.0"

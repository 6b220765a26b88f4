"""Exception types shared across the package."""


class CopspecError(Exception):
    """Base class for all copspec-specific errors."""


class NotSelfMapError(CopspecError):
    """The map does not send the upper half-plane into itself."""


class IdentityMapError(CopspecError):
    """The identity map was supplied where a non-trivial map is required."""


class NotBoundedError(CopspecError):
    """The map does not induce a bounded composition operator.

    Carries a human-readable reason naming the violated condition
    (``c != 0`` so infinity is not fixed, or a slope that is not a
    positive real number).
    """


class NotCanonicalError(CopspecError):
    """A canonical translation or pure dilation was expected."""


class WrongFormError(CopspecError):
    """The map is not of the normalized contracting form mu*w + i*(1-mu)."""


class NotClosedError(CopspecError):
    """The requested operation leaves the closed-form function family."""


class UnsupportedSpaceError(CopspecError):
    """The operation is not defined for this space family."""


class NotInSpaceError(CopspecError):
    """The function fails the square-integrability test for the space."""


class NonConvergentError(CopspecError):
    """A quadrature did not stabilize within the allowed refinements."""


class GridMismatchError(CopspecError):
    """The log grid ratio is incompatible with the dilation slope."""


class WindowViolationError(CopspecError):
    """The sequence index is below the disjointness threshold ln(1/mu)."""


class MembershipViolationError(CopspecError):
    """The eigenfunction parameter is outside the admissible range."""

"""Exception types shared across the package.

Every error raised by the public API derives from FraccalcError so callers
can catch the whole family at once.
"""


class FraccalcError(Exception):
    """Base class for all package errors."""


class PoleError(FraccalcError):
    """A gamma factor was requested exactly at a non-positive integer."""


class ParameterError(FraccalcError):
    """Parameters violate the defining constraints of a function family."""


class UnsupportedRegime(FraccalcError):
    """No closed-form growth indices are available for this parameter regime."""


class DegenerateInput(FraccalcError):
    """Input data carries no usable information (e.g. all-zero coefficients)."""


class DivergenceError(FraccalcError):
    """The requested series evaluation point lies outside the convergence domain."""


class UnsupportedReduction(FraccalcError):
    """No Fox-Wright representation is available for this variant."""


class SectorError(FraccalcError):
    """Argument or parameters lie outside the validity sector of an expansion."""


class DomainError(FraccalcError):
    """Evaluation point outside the domain of definition."""


class QuadratureError(FraccalcError):
    """A quadrature rule failed to meet its error budget."""


class ContourError(FraccalcError):
    """Contour geometry violates the preconditions of an integral representation."""


class PoleProximityError(FraccalcError):
    """A quadrature node landed too close to a pole of the integrand."""


class LogCaseError(FraccalcError):
    """Analytic continuation hit the logarithmic case (integer parameter gap)."""


class StripError(FraccalcError):
    """Transform variable outside the admissible vertical strip."""


class ConvergenceError(FraccalcError):
    """An improper integral fails its convergence precondition."""


class SingularityError(FraccalcError):
    """Integrand endpoint singularity is non-integrable."""


class StencilError(FraccalcError):
    """Finite-difference stencil error estimate exceeded the tolerance."""


class ConstraintError(FraccalcError):
    """Power-function formula preconditions are not met."""


class TruncationWarning(UserWarning):
    """A truncated improper integral's tail exceeds the negligibility budget."""

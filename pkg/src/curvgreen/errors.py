"""Exception types shared across the library.

Every error raised on a contract violation derives from
:class:`CurvGreenError` and carries a short machine-readable ``code``
that the CLI maps to exit status 1.
"""


class CurvGreenError(ValueError):
    """Base class for all domain/parameter errors raised by curvgreen."""

    code = "ERROR"


class DomainError(CurvGreenError):
    """Argument outside the valid domain of an operation."""

    code = "DOMAIN"


class RangeError(DomainError):
    """Coordinate or parameter outside its admissible range."""

    code = "RANGE"


class PoleError(CurvGreenError):
    """Evaluation exactly at a pole of the function."""

    code = "POLE"


class ParamPoleError(PoleError):
    """A parameter (not the argument) sits on a pole of a gamma factor."""

    code = "PARAM_POLE"


class UndefinedError(CurvGreenError):
    """The function is undefined for this parameter combination."""

    code = "UNDEFINED"


class NoConvergenceError(CurvGreenError):
    """An iterative scheme failed to converge within its budget."""

    code = "NO_CONVERGENCE"


class EigenvaluePoleError(CurvGreenError):
    """Wavenumber within the refusal window of a Laplace-Beltrami eigenvalue."""

    code = "EIGENVALUE_POLE"


class WrongVariantError(CurvGreenError):
    """Operation invoked for a Green's-function variant it does not cover."""

    code = "WRONG_VARIANT"


class WrongCaseError(CurvGreenError):
    """Special-case series invoked with parameters of a different case."""

    code = "WRONG_CASE"


class InsufficientDataError(CurvGreenError):
    """Not enough data points for a fit."""

    code = "INSUFFICIENT_DATA"


class OffManifoldError(CurvGreenError):
    """Ambient point does not satisfy the manifold constraint."""

    code = "OFF_MANIFOLD"


class GridError(CurvGreenError):
    """Residual grid violates its spacing/exclusion preconditions."""

    code = "GRID"


class DomainViolationError(CurvGreenError):
    """Expansion evaluated outside its convergence domain."""

    code = "DOMAIN_VIOLATION"

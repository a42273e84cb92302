"""Exception types shared across the package."""


class HardySineError(Exception):
    """Base class for all package-specific errors."""


class PoleError(HardySineError):
    """Gamma-type function evaluated at a nonpositive-integer pole."""


class ConvergenceError(HardySineError):
    """A series did not reach the requested tolerance within the term budget."""


class DomainError(HardySineError):
    """An argument lies outside the admissible domain of the operation."""


class QuadratureError(HardySineError):
    """Numerical integration failed to meet its accuracy target."""


class ExtrapolationError(HardySineError):
    """Boundary-value extrapolation diverged (input not of limit-compatible type)."""


class NearPoleError(HardySineError):
    """Evaluation requested inside the guard radius of a spectral pole."""


class RootError(HardySineError):
    """Root bracketing failed where a sign change was expected."""


class NumericalError(HardySineError):
    """A linear-algebra precondition (e.g. positive definiteness) was violated."""


class AdmissibilityError(HardySineError):
    """A test function violates the boundary hypotheses of the chosen inequality."""

"""Exception types raised by the solver."""


class GraetzError(Exception):
    """Base class for all solver errors."""


class DomainError(GraetzError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(GraetzError, ArithmeticError):
    """An iterative procedure failed to meet its tolerance."""


class BracketExhaustionError(ConvergenceError):
    """Fewer sign changes were found than roots requested."""


class DegenerateError(GraetzError, ArithmeticError):
    """A normalizing quantity is too small to divide by."""


class GridMismatchError(GraetzError, ValueError):
    """A finite-difference grid does not cover the requested region."""

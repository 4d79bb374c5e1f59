"""Exception types raised by the library."""


class DomainError(ValueError):
    """Argument outside the domain where the quantity is defined."""


class ConvergenceError(ArithmeticError):
    """A series could not meet the requested accuracy within the term cap."""


class BracketError(ValueError):
    """A root bracket does not show a sign change."""


class ParameterError(ValueError):
    """A parameter is missing or outside its admissible range."""


class InvariantError(ArithmeticError):
    """A structural property that must hold (sign, monotonicity, recurrence) failed in computed data."""

class ValidationError(ValueError):
    """Input violates an operation's precondition."""


class CapacityError(ValidationError):
    """Input is too large for an exhaustive enumeration."""


class ConvergenceError(RuntimeError):
    """Iterative eigensolver exceeded its iteration cap."""


class ConsistencyError(ArithmeticError):
    """An exact formula produced a value it never should (e.g. a non-integer count)."""

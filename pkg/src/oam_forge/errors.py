"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when inputs violate a documented precondition or invariant."""


class NumericError(ArithmeticError):
    """Raised when a numerical routine cannot deliver its accuracy contract."""

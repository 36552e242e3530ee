"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the supported domain of an operation."""


class NumericalError(ArithmeticError):
    """A computation produced non-finite values or otherwise failed."""


class ToleranceError(NumericalError):
    """An adaptive scheme exhausted its budget before reaching tolerance."""

"""Exception types shared across the package."""


class PolyParseError(ValueError):
    """Malformed polynomial or element text."""


class InvalidCodeError(ValueError):
    """Parity-check polynomial does not define a valid code (q <= 2,
    repeated factors, zero constant term, ...)."""


class BudgetExceededError(RuntimeError):
    """Requested enumeration would exceed the codeword budget."""


class InvariantViolation(RuntimeError):
    """A structural identity that must hold for every code failed; this
    always indicates a bug in the enumeration machinery, never bad input."""

"""Exception types shared across the package.

All inherit ValueError so callers that only care about "bad input"
can catch one thing.
"""


class DomainError(ValueError):
    """Arguments are outside the mathematical domain of the operation."""


class InputError(ValueError):
    """Malformed or inconsistent user input (CLI arguments, file contents)."""


class CapacityError(ValueError):
    """Request is valid but exceeds the configured size limits."""


class NumericError(ValueError):
    """An internal numeric consistency check failed."""

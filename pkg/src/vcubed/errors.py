"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so library code should raise
the most specific one that applies.
"""


class ParseError(ValueError):
    """Malformed textual input. Carries the offending position."""

    def __init__(self, message: str, position: int = -1):
        super().__init__(message if position < 0 else f"{message} (at position {position})")
        self.position = position


class CapExceeded(RuntimeError):
    """A configured resource cap would be exceeded; nothing was computed."""


class PreconditionError(ValueError):
    """A mathematical precondition of an operation is violated."""

"""Error types shared across the library.

Two failure surfaces are kept deliberately distinct: DomainError means the
input was rejected and the answer is knowable in principle; UndecidedError
means the work budget ran out before an answer was reached.  The CLI maps
them to different exit codes (2 and 3).
"""


class FibquatError(Exception):
    """Base class for library errors."""


class DomainError(FibquatError, ValueError):
    """Rejected input: out-of-range index, degenerate parameter, bad value."""


class UndecidedError(FibquatError, RuntimeError):
    """The factorization work budget was exhausted; no answer is guessed."""

    def __init__(self, message: str, spent: int = 0, limit: int = 0):
        super().__init__(message)
        self.spent = spent
        self.limit = limit

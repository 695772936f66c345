"""Exception hierarchy shared across the package.

Everything raised on purpose derives from GrundyTDError so callers (and the
CLI) can tell deliberate rejections apart from genuine bugs.
"""


class GrundyTDError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(GrundyTDError, ValueError):
    """A constructor or family builder was given out-of-contract parameters."""


class ParseError(GrundyTDError, ValueError):
    """Malformed textual input.  Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SequenceError(GrundyTDError, ValueError):
    """A vertex sequence violates basic shape rules (range, duplicates)."""


class DomainError(GrundyTDError, ValueError):
    """The instance is outside the operation's mathematical domain.

    Examples: isolated vertices where total domination is undefined, a
    non-regular graph handed to the regular-graph construction.
    """


class PreconditionError(GrundyTDError, ValueError):
    """A documented precondition on the arguments does not hold."""


class CapacityError(GrundyTDError):
    """The instance exceeds the configured exact-search size cap."""


class InvariantViolation(GrundyTDError):
    """A mathematically guaranteed property failed to hold.

    Raised when a computation contradicts a proven statement (e.g. some
    intermediate sequence length between the minimum and the maximum has no
    witness).  Always indicates a bug, never bad input.
    """

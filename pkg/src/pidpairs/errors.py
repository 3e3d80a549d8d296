"""Exception types shared across the package."""


class ParseError(Exception):
    """Raised when matrix-file text is malformed.

    Carries the 1-based line and column of the offending token so
    command line tools can print a precise diagnostic.
    """

    def __init__(self, message, line, col):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        return f"{self.line}:{self.col}: {self.message}"


class NoSolutionError(ValueError):
    """A linear system has no solution over the ring."""


class SingularMatrixError(ValueError):
    """A matrix that must be nonsingular is singular."""


class HypothesisError(ValueError):
    """An input violates a structural hypothesis of the requested
    operation (full column rank, purity of a span, containment).

    The message names the hypothesis that failed; callers such as the
    CLI surface it verbatim.
    """

"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Malformed or unsupported graph input."""


class DisconnectedGraphError(GraphError):
    def __init__(self, message: str = "graph not connected") -> None:
        super().__init__(message)


class ParseError(GraphError):
    """Input file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IndexOverflowError(OverflowError):
    """A result does not fit in an unsigned 64-bit integer."""


class NotPartialCubeError(ValueError):
    """Raised when an index computation needs a partial cube and gets something else.

    ``rejection`` holds the :class:`edgewiener.theta.Rejection` value explaining why.
    """

    def __init__(self, rejection) -> None:
        self.rejection = rejection
        super().__init__(rejection.reason)


class BenzenoidError(ValueError):
    """Invalid hexagon set (duplicate, disconnected, or with a hole)."""


class ConsistencyError(RuntimeError):
    """Two internal computations that must agree did not."""

"""
Exceptions raised by the Pfaffian orientation toolkit.

Services raise these; controllers turn them into HTTP errors and the CLI
turns them into exit codes.
"""


class PfaffianError(Exception):
    """Base class for every error raised by this package."""


class GraphFormatError(PfaffianError, ValueError):
    """A graph, digraph, matrix or orientation file could not be parsed."""

    def __init__(self, message: str, line: int = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidGraphError(PfaffianError, ValueError):
    """A structural precondition on the input graph does not hold."""


class SizeLimitExceeded(PfaffianError):
    """An exact computation was refused because the input is too large."""

    def __init__(self, what: str, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"{what} of size {size} exceeds the configured limit {limit}")


class NotPerfectMatchingError(InvalidGraphError):
    """The given edge set is not a perfect matching of the graph."""


class NoPerfectMatchingError(InvalidGraphError):
    """The graph has no perfect matching."""


class DisconnectedGraphError(InvalidGraphError):
    """The operation requires a connected graph."""


class NotExtendableError(InvalidGraphError):
    """The graph is not 1-extendable."""


class NotABraceError(InvalidGraphError):
    """The graph is not a brace."""


class NotATrisectorError(InvalidGraphError):
    """The vertex set is not a (balanced) trisector of the graph."""


class NotPlanarError(InvalidGraphError):
    """The graph has no planar embedding."""


class NotHeawoodError(InvalidGraphError):
    """The graph is not isomorphic to the Heawood graph."""


class AlignmentError(PfaffianError):
    """No vertex flip makes two orientations agree on a shared 4-circuit."""


class SpliceError(PfaffianError):
    """A spliced orientation failed its Pfaffian self-check."""


class VerificationError(PfaffianError):
    """An output failed verification against the exact oracle."""

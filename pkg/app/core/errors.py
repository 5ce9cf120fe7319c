"""
Domain errors.

Every error is a ValueError so the API layer's generic handling still applies;
`exit_code` is what the command line returns for it.
"""

from app.models.enums import ExitCode


class ChromaCoverError(ValueError):
    exit_code: ExitCode = ExitCode.USAGE


class GraphFormatError(ChromaCoverError):
    """Malformed graph, signing, voltage or coloring text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VertexRangeError(ChromaCoverError):
    """A vertex index outside 0..n-1."""


class PartitionError(ChromaCoverError):
    """Blocks that overlap, leave a vertex uncovered or are empty."""


class PreconditionError(ChromaCoverError):
    """An operation was called outside its domain."""


class ImproperColoringError(PreconditionError):
    pass


class InapplicableClaimError(PreconditionError):
    """The hypothesis of a checked claim does not hold for this input."""


class NotMultipartiteError(PreconditionError):
    pass


class SizeLimitError(ChromaCoverError):
    exit_code = ExitCode.SIZE_GUARD

    def __init__(self, message: str, greedy_bound: int | None = None):
        self.greedy_bound = greedy_bound
        super().__init__(message)


class SubgraphMismatchError(ChromaCoverError):
    """Subgraph is not a spanning subgraph of the stated parent."""

    exit_code = ExitCode.MISMATCH


class VoltageError(ChromaCoverError):
    """Permutation voltage violating inverse symmetry or fold range."""

    exit_code = ExitCode.VOLTAGE

"""Exception types shared by all curvflow modules."""


class CurvflowError(Exception):
    """Base class for all curvflow errors."""


class EdgeListParseError(CurvflowError):
    """A data line in an edge-list file could not be parsed."""

    def __init__(self, path, line_number, message):
        self.path = str(path)
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: {message}")


class DirectedInputError(CurvflowError):
    """Input contains an arc without its reverse under the reject-directed policy."""


class EmptyInputError(CurvflowError):
    """An edge-list file yielded zero edges."""


class EmptyGraphError(CurvflowError):
    """An operation requires a graph with at least one node/edge."""


class NotAnEdgeError(CurvflowError):
    """The requested node pair is not an edge of the graph."""

    def __init__(self, u, v):
        super().__init__(f"({u}, {v}) is not an edge")
        self.u = u
        self.v = v


class InvalidPairError(CurvflowError):
    """A node-pair operation was called with u == v."""


class OracleScaleError(CurvflowError):
    """The brute-force reference oracle refuses graphs beyond its size bound."""


class ResourceBudgetError(CurvflowError):
    """A dense matrix allocation would exceed the configured memory budget."""


class ProfileMismatchError(CurvflowError):
    """Two decay profiles do not cover the requested powers."""


class EmptyDistributionError(CurvflowError):
    """softmax sampling was asked to draw from zero candidates."""

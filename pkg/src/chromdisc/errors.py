"""Exception types raised across the package."""


class GraphError(ValueError):
    """Base class for invalid graph input or invalid operation arguments."""


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EdgeNotPresent(GraphError):
    pass


class EmptyVertexSet(GraphError):
    pass


class Disconnected(GraphError):
    pass


class SizeGuard(GraphError):
    """An enumeration would exceed its configured size cap."""


class InvariantViolation(GraphError):
    """An input object does not satisfy the invariants of its set."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateEdge(ParseError):
    pass

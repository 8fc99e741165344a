"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or invalid operation arguments."""


class CapacityError(GraphError):
    """The requested computation exceeds the supported graph order."""


class DomainError(GraphError):
    """The input lies outside the domain of a polynomial computation."""


class ParseError(ValueError):
    """Malformed serialized graph input.

    ``offset`` is the byte (or line) offset of the problem when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset

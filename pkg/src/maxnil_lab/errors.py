"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input: loops, bad vertex ids, unknown endpoints."""


class ConfigurationError(ValueError):
    """A constructor was asked for a family member that does not exist."""


class Graph6Error(ValueError):
    """Invalid graph6 text.

    ``offset`` is the byte position (within the record, after any
    ``>>graph6<<`` header) where decoding failed, or -1 when the record
    is truncated.
    """

    def __init__(self, message: str, offset: int = -1):
        super().__init__(message)
        self.offset = offset


class UndecidedError(RuntimeError):
    """A decision procedure gave up before reaching a verdict.

    Raised by the minor search when a node budget is exhausted; callers
    that need a hard answer should re-run without a budget.
    """

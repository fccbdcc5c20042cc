"""Exception hierarchy shared by every module."""


class BContinuityError(Exception):
    """Base class for all package errors."""


class PreconditionError(BContinuityError, ValueError):
    """An operation was called outside its documented domain."""


class ParseError(BContinuityError, ValueError):
    """Malformed graph or coloring text.

    ``offset`` is the byte/line position of the problem when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class CapExceededError(BContinuityError):
    """Exhaustive search refused because the graph exceeds the vertex cap."""

    def __init__(self, n, cap):
        super().__init__(f"graph has {n} vertices, exceeding the exhaustive-search cap of {cap}")
        self.n = n
        self.cap = cap


class ImpossibleStateError(BContinuityError, RuntimeError):
    """A state that the underlying combinatorial argument rules out was reached.

    ``instance`` carries whatever is needed to reproduce it (graph6, coloring,
    witness...) so callers can dump it for inspection.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance or {}

"""Exception types shared across the package."""


class QuiverstabError(Exception):
    """Base class for all quiverstab errors."""


class OrientationParseError(QuiverstabError, ValueError):
    """Invalid orientation word. Carries the 1-based offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class DomainError(QuiverstabError, ValueError):
    """An operation was called outside its mathematical domain."""


class ResourceLimitError(QuiverstabError, RuntimeError):
    """An exhaustive computation exceeded its configured guard."""


class DecompositionNotFoundError(QuiverstabError, RuntimeError):
    """No decomposition was found within the coefficient bound.

    Distinct from a proof of nonexistence: the search is exhaustive only
    within the bound (the message says which situation occurred).
    """

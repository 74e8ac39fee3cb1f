"""Shared exception types.

Exit-code mapping in the CLI: DomainError -> 1, ResourceCapError -> 2,
usage problems -> 64.
"""


class DomainError(ValueError):
    """Mathematically invalid input (bad Cartan pair, non-reduced word, ...)."""


class UnsupportedTypeError(DomainError):
    """Operation restricted to simply-laced Cartan matrices."""


class ResourceCapError(RuntimeError):
    """A configured size cap was exceeded; carries partial results if any."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class LaurentViolationError(RuntimeError):
    """Exact Laurent division failed.

    The Laurent phenomenon guarantees exactness of every exchange division,
    so seeing this error means the implementation (not the input) is broken.
    """

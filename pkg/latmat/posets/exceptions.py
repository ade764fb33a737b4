"""Poset exceptions."""

from ..constants import ERROR_MESSAGES
from ..exceptions import LatmatError


class PosetError(LatmatError):
    """Base exception for poset construction and incidence algebra errors."""

    pass


class CycleError(PosetError):
    """Raised when cover relations close into a cycle."""

    def __init__(self, i: int, j: int):
        """Initialize with two elements on the cycle."""
        self.i = i
        self.j = j
        if i == j:
            message = ERROR_MESSAGES["self_cover"].format(i=i)
        else:
            message = ERROR_MESSAGES["cycle"].format(i=i, j=j)
        super().__init__(message)


class InvalidPosetError(PosetError):
    """Raised when a stored order relation breaks a poset invariant."""

    pass


class SizeError(PosetError):
    """Raised when an operation is asked to work beyond its size ceiling."""

    def __init__(self, what: str, n: int, limit: int, minimum: bool = False):
        """Initialize with the operation name, requested size and bound."""
        self.what = what
        self.n = n
        self.limit = limit
        key = "size_minimum" if minimum else "size_limit"
        super().__init__(ERROR_MESSAGES[key].format(what=what, n=n, limit=limit))


class MismatchError(PosetError):
    """Raised when incidence functions on different posets are combined."""

    def __init__(self) -> None:
        """Initialize with the standard message."""
        super().__init__(ERROR_MESSAGES["poset_mismatch"])


class NoBottomError(PosetError):
    """Raised when an operation needs a least element and there is none."""

    def __init__(self) -> None:
        """Initialize with the standard message."""
        super().__init__(ERROR_MESSAGES["no_bottom"])

"""Matrix exceptions."""

from ..constants import ERROR_MESSAGES
from ..exceptions import LatmatError


class MatrixError(LatmatError):
    """Base exception for exact matrix errors."""

    pass


class ShapeError(MatrixError):
    """Raised when a matrix has the wrong shape for an operation."""

    def __init__(self, reason: str):
        """Initialize with what is wrong about the shape."""
        self.reason = reason
        super().__init__(ERROR_MESSAGES["shape"].format(reason=reason))


class SingularError(MatrixError):
    """Raised when inverting a matrix with zero determinant."""

    def __init__(self) -> None:
        """Initialize with the standard message."""
        super().__init__(ERROR_MESSAGES["singular"])


class FactorizationError(MatrixError):
    """Raised when a join factorization fails to reproduce the join matrix."""

    def __init__(self, i: int, j: int):
        """Initialize with the first mismatching entry."""
        self.entry = (i, j)
        super().__init__(f"Factorization does not reproduce entry ({i}, {j})")


class NotFactorClosedError(MatrixError):
    """Raised when a set of integers is not closed under taking divisors."""

    def __init__(self, divisor: int, element: int):
        """Initialize with a missing divisor and its multiple."""
        self.divisor = divisor
        self.element = element
        super().__init__(
            ERROR_MESSAGES["not_factor_closed"].format(divisor=divisor, element=element)
        )

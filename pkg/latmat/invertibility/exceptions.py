"""Invertibility method exceptions."""

from ..constants import ERROR_MESSAGES
from ..exceptions import LatmatError


class InvertibilityError(LatmatError):
    """Base exception for construction-sequence and condition errors."""

    pass


class ShapeError(InvertibilityError):
    """Raised when a valued set does not have the shape a check requires."""

    def __init__(self, kind: str, reason: str):
        """Initialize with the expected shape and what is wrong."""
        self.kind = kind
        self.reason = reason
        super().__init__(ERROR_MESSAGES["special_shape"].format(kind=kind, reason=reason))


class ZeroDenominatorError(InvertibilityError):
    """Raised when the join form of the two-cover condition divides by zero."""

    def __init__(self, y1: int, y2: int, join: int):
        """Initialize with the covered pair and their join."""
        self.pair = (y1, y2)
        self.join = join
        super().__init__(
            ERROR_MESSAGES["zero_denominator"].format(y1=y1, y2=y2, join=join)
        )

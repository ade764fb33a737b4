"""Number-theoretic tooling exceptions."""

from ..constants import ERROR_MESSAGES
from ..exceptions import LatmatError


class NumtheoryError(LatmatError):
    """Base exception for gcd-closed set tooling."""

    pass


class ParamError(NumtheoryError):
    """Raised when inequality parameters break a side-condition."""

    def __init__(self, cls: str, reason: str):
        """Initialize with the function class and the violated condition."""
        self.cls = cls
        self.reason = reason
        super().__init__(ERROR_MESSAGES["param"].format(cls=cls, reason=reason))


class ExhaustionError(NumtheoryError):
    """Raised when random generation runs out of attempts."""

    def __init__(self, n: int, bound: int):
        """Initialize with the requested size and value bound."""
        self.n = n
        self.bound = bound
        super().__init__(ERROR_MESSAGES["exhaustion"].format(n=n, bound=bound))


class RouteMismatchError(NumtheoryError):
    """Raised when two exact determinant routes disagree."""

    def __init__(self, elements: tuple[int, ...], det: object, other: object):
        """Initialize with the set and both determinant values."""
        self.elements = elements
        super().__init__(
            ERROR_MESSAGES["route_mismatch"].format(
                elements=elements, det=det, other=other
            )
        )

"""Lattice and valuation exceptions."""

from ..constants import ERROR_MESSAGES
from ..exceptions import LatmatError


class LatticeError(LatmatError):
    """Base exception for ambient lattice and valued set errors."""

    pass


class DuplicateError(LatticeError):
    """Raised when an element set repeats an element."""

    def __init__(self, element: object):
        """Initialize with the repeated element."""
        self.element = element
        super().__init__(ERROR_MESSAGES["duplicate"].format(element=element))


class NonPositiveError(LatticeError):
    """Raised when a divisor lattice element is not a positive integer."""

    def __init__(self, element: object):
        """Initialize with the offending element."""
        self.element = element
        super().__init__(ERROR_MESSAGES["non_positive"].format(element=element))


class NotInAmbientError(LatticeError):
    """Raised when an element is not part of an abstract lattice."""

    def __init__(self, element: object):
        """Initialize with the offending element."""
        self.element = element
        super().__init__(ERROR_MESSAGES["not_in_ambient"].format(element=element))


class ZeroValueError(LatticeError):
    """Raised when a valuation evaluates to zero."""

    def __init__(self, valuation: str, element: object):
        """Initialize with the valuation description and the element."""
        self.valuation = valuation
        self.element = element
        super().__init__(
            ERROR_MESSAGES["zero_value"].format(valuation=valuation, element=element)
        )


class UndefinedValueError(LatticeError):
    """Raised when a table valuation has no entry for an element."""

    def __init__(self, valuation: str, element: object):
        """Initialize with the valuation description and the element."""
        self.valuation = valuation
        self.element = element
        super().__init__(
            ERROR_MESSAGES["undefined_value"].format(
                valuation=valuation, element=element
            )
        )


class NotSemimultiplicativeError(LatticeError):
    """Raised when f(x)f(y) != f(x meet y)f(x join y) for some pair."""

    def __init__(self, witness: tuple[int, int]):
        """Initialize with the failing pair."""
        self.witness = witness
        super().__init__(
            ERROR_MESSAGES["not_semimultiplicative"].format(
                x=witness[0], y=witness[1]
            )
        )


class NotMeetClosedError(LatticeError):
    """Raised when an operation needs a meet-closed set."""

    def __init__(self, x: int, y: int, meet: int):
        """Initialize with a pair whose meet is missing from the set."""
        self.witness = (x, y)
        self.meet = meet
        super().__init__(
            ERROR_MESSAGES["not_meet_closed"].format(x=x, y=y, meet=meet)
        )


class LatticeTableError(LatticeError):
    """Raised when meet/join tables do not describe a lattice."""

    def __init__(self, reason: str):
        """Initialize with what went wrong."""
        self.reason = reason
        super().__init__(ERROR_MESSAGES["lattice_table"].format(reason=reason))

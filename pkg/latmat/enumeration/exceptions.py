"""Enumeration and catalog exceptions."""

from ..constants import ERROR_MESSAGES
from ..exceptions import LatmatError


class EnumerationError(LatmatError):
    """Base exception for semilattice enumeration and catalog errors."""

    pass


class UnknownLabelError(EnumerationError):
    """Raised when a catalog label does not exist."""

    def __init__(self, label: str):
        """Initialize with the missing label."""
        self.label = label
        super().__init__(ERROR_MESSAGES["unknown_label"].format(label=label))


class CatalogError(EnumerationError):
    """Raised when the shipped catalog data is inconsistent."""

    def __init__(self, label: str, reason: str):
        """Initialize with the entry and what is wrong with it."""
        self.label = label
        self.reason = reason
        super().__init__(ERROR_MESSAGES["catalog"].format(label=label, reason=reason))

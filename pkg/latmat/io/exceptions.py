"""Input and output exceptions."""

from ..constants import ERROR_MESSAGES
from ..exceptions import LatmatError


class FormatError(LatmatError):
    """Raised when a JSON document or argument cannot be parsed."""

    def __init__(self, what: str, value: str):
        """Initialize with the kind of input and the offending value."""
        self.what = what
        self.value = value
        super().__init__(ERROR_MESSAGES["parse"].format(what=what, value=value))

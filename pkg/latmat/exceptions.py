"""Root exception for latmat."""


class LatmatError(Exception):
    """Base exception for every error raised by latmat."""

    pass

"""Command-line interface for latmat."""

from .app import app

__all__ = ["app"]

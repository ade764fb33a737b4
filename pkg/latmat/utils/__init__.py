"""Utility modules for latmat."""

from .config import Settings, get_settings, setup_logging
from .workers import parallel_map, resolve_threads

__all__ = [
    "Settings",
    "get_settings",
    "setup_logging",
    "parallel_map",
    "resolve_threads",
]

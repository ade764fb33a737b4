"""Order-preserving parallel map over independent work items."""

import logging
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

from ..constants import LOG_MESSAGES
from .config import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: int | None) -> int:
    """Return the worker count, falling back to the configured default."""
    if threads is None:
        threads = get_settings().threads
    return max(1, threads)


def parallel_map(
    fn: Callable[[T], R], items: Iterable[T], threads: int | None = None
) -> list[R]:
    """Apply a pure, picklable function to every item, keeping input order.

    Runs in-process for a single worker, otherwise on a process pool.
    """
    work = list(items)
    workers = min(resolve_threads(threads), max(1, len(work)))
    if workers == 1:
        return [fn(item) for item in work]

    logger.info(LOG_MESSAGES["worker_pool"].format(tasks=len(work), threads=workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, work))

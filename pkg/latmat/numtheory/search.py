"""Structured search for singular LCM matrices on gcd-closed sets.

The s38 template builds sets shaped like Hong's counterexample: bottom 1,
pairwise coprime atoms p, q, r, a middle layer

    y1 = p*q*a,  y2 = p*r*b,  y3 = q*r*c

with gcd(y1, y2) = p, gcd(y1, y3) = q, gcd(y2, y3) = r, and the top
L = lcm(y1, y2, y3). Clearing denominators in the last condition value
gives the integer test

    L/y1 + L/y2 + L/y3 - L/p - L/q - L/r + L == L/top

whose left side is an integer. The top is a multiple tL of L and L/top = 1/t
is an integer only for t = 1, so the search fixes top = L.
"""

import logging
from dataclasses import dataclass
from functools import partial
from math import gcd, lcm

from ..constants import HONG_TARGET_LABEL, LOG_MESSAGES
from ..enumeration import classify
from ..lattice import divisor_subposet
from ..utils import parallel_map, resolve_threads
from .counterexamples import is_gcd_closed, pad_with_chain

logger = logging.getLogger(__name__)

TEMPLATES = ("s38",)


@dataclass(frozen=True)
class SearchTemplate:
    """Parameter grid of the s38 search.

    ``bound`` caps the multipliers a, b, c; ``pad`` appends that many chain
    elements above each hit, giving singular sets of size 8 + pad.
    """

    name: str = "s38"
    target: str = HONG_TARGET_LABEL
    atoms: tuple[int, int, int] = (2, 3, 5)
    bound: int = 60
    pad: int = 0

    def __post_init__(self) -> None:
        if self.name not in TEMPLATES:
            raise ValueError(f"Unknown search template {self.name!r}")
        if self.bound < 1:
            raise ValueError(f"Search bound must be positive, got {self.bound}")
        if self.pad < 0:
            raise ValueError(f"Padding must be non-negative, got {self.pad}")
        p, q, r = self.atoms
        if min(self.atoms) < 2 or gcd(p, q) != 1 or gcd(p, r) != 1 or gcd(q, r) != 1:
            raise ValueError(f"Atoms must be pairwise coprime and > 1: {self.atoms}")


def _candidate(
    atoms: tuple[int, int, int], a: int, b: int, c: int
) -> tuple[int, ...] | None:
    p, q, r = atoms
    y1, y2, y3 = p * q * a, p * r * b, q * r * c
    if gcd(y1, y2) != p or gcd(y1, y3) != q or gcd(y2, y3) != r:
        return None
    if y1 % r == 0 or y2 % q == 0 or y3 % p == 0:
        return None
    top = lcm(y1, y2, y3)
    value = top // y1 + top // y2 + top // y3 - top // p - top // q - top // r + top
    if value != 1:
        return None
    return tuple(sorted((1, p, q, r, y1, y2, y3, top)))


def search_shard(template: SearchTemplate, c: int) -> list[tuple[int, ...]]:
    """Hits with a fixed last multiplier c, in (b, a) order."""
    hits: list[tuple[int, ...]] = []
    for b in range(1, template.bound + 1):
        for a in range(1, template.bound + 1):
            found = _candidate(template.atoms, a, b, c)
            if found is None or not is_gcd_closed(found):
                continue
            if classify(divisor_subposet(found)) != template.target:
                continue
            logger.debug(LOG_MESSAGES["search_hit"].format(elements=found))
            hits.append(found)
    return hits


def search_singular(
    template: SearchTemplate, limit: int, threads: int | None = None
) -> list[tuple[int, ...]]:
    """Singular gcd-closed sets in colex order of (a, b, c), at most ``limit``."""
    if limit < 1:
        return []
    workers = resolve_threads(threads)
    shard = partial(search_shard, template)
    hits: list[tuple[int, ...]] = []
    tried = 0
    for start in range(1, template.bound + 1, workers):
        batch = range(start, min(start + workers, template.bound + 1))
        for found in parallel_map(shard, batch, workers):
            hits.extend(found)
        tried += len(batch) * template.bound**2
        logger.info(
            LOG_MESSAGES["search_progress"].format(
                template=template.name, tried=tried, found=len(hits)
            )
        )
        if len(hits) >= limit:
            break
    return [pad_with_chain(found, template.pad) for found in hits[:limit]]

"""Meet semilattices up to isomorphism.

Every n-element meet semilattice arises from an (n-1)-element one by adding
a new maximal element above a nonempty antichain, so each level is built
from the previous one and deduplicated by canonical key.
"""

import logging
from collections.abc import Iterator, Sequence

from ..constants import FILTER_ROUTE_MAX_SIZE, LOG_MESSAGES
from ..invertibility import max_cover_degree
from ..posets import (
    CanonicalKey,
    Poset,
    SizeError,
    canonical_form_with_key,
    iter_bits,
)
from ..utils import get_settings, parallel_map

logger = logging.getLogger(__name__)


def antichains(poset: Poset) -> Iterator[int]:
    """Nonempty antichains of ``poset`` as bitmasks, in increasing order."""
    comparable = [poset.down[i] | poset.up[i] for i in range(poset.n)]
    for mask in range(1, 1 << poset.n):
        if all(
            not (mask & comparable[i] & ~(1 << i)) for i in iter_bits(mask)
        ):
            yield mask


def keeps_meets(poset: Poset, below: int) -> bool:
    """Whether a new element with strict down-set ``below`` keeps all meets.

    Only pairs involving the new element need checking.
    """
    for y in range(poset.n):
        common = below & poset.down[y]
        if not common:
            return False
        candidate = common.bit_length() - 1
        if poset.down[candidate] != common:
            return False
    return True


def extensions(parent: Poset) -> list[tuple[CanonicalKey, Poset]]:
    """Canonical meet-semilattice extensions by one maximal element."""
    n = parent.n
    results = []
    for antichain in antichains(parent):
        below = 0
        for i in iter_bits(antichain):
            below |= parent.down[i]
        if not keeps_meets(parent, below):
            continue
        child = Poset(n + 1, parent.down + (below | 1 << n,))
        results.append(canonical_form_with_key(child, max_size=n + 1))
    return results


def _check_size(n: int, limit: int, what: str) -> None:
    if n < 1:
        raise SizeError(what, n, 1, minimum=True)
    if n > limit:
        raise SizeError(what, n, limit)


def enumerate_meet_semilattices(
    n: int, *, max_size: int | None = None, threads: int | None = None
) -> list[Poset]:
    """One canonical representative per isomorphism class, sorted by key."""
    limit = max_size if max_size is not None else get_settings().enumeration_max_size
    _check_size(n, limit, "enumerate_meet_semilattices")

    level = [Poset(1, (1,))]
    for size in range(2, n + 1):
        batches = parallel_map(extensions, level, threads)
        found: dict[CanonicalKey, Poset] = {}
        candidates = 0
        for batch in batches:
            candidates += len(batch)
            for key, form in batch:
                found.setdefault(key, form)
        logger.debug(
            LOG_MESSAGES["enumeration_candidates"].format(
                n=size, candidates=candidates, parents=len(level)
            )
        )
        level = [found[key] for key in sorted(found)]
        logger.info(LOG_MESSAGES["enumeration_level"].format(count=len(level), n=size))
    return level


def _order_ideals(down: Sequence[int]) -> Iterator[int]:
    size = len(down)
    for mask in range(1 << size):
        if all(down[i] & ~mask == 0 for i in iter_bits(mask)):
            yield mask


def _naturally_labeled(n: int) -> Iterator[tuple[int, ...]]:
    def grow(down: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(down) == n:
            yield down
            return
        new = len(down)
        for ideal in _order_ideals(down):
            yield from grow(down + (ideal | 1 << new,))

    yield from grow(())


def enumerate_by_filter(n: int) -> list[Poset]:
    """Meet semilattices by filtering every naturally labeled poset.

    An independent and much slower route than enumerate_meet_semilattices.
    """
    _check_size(n, FILTER_ROUTE_MAX_SIZE, "enumerate_by_filter")
    found: dict[CanonicalKey, Poset] = {}
    for down in _naturally_labeled(n):
        poset = Poset(n, down)
        if poset.is_meet_semilattice():
            key, form = canonical_form_with_key(poset, max_size=n)
            found.setdefault(key, form)
    return [found[key] for key in sorted(found)]


def filter_min_cover(semis: Sequence[Poset], k: int) -> list[Poset]:
    """Keep the semilattices with some element covering at least k others."""
    return [poset for poset in semis if max_cover_degree(poset) >= k]

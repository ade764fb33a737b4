"""Finite posets stored as per-element down-set bitmasks.

Elements are always indexed by a linear extension: ``i <= j`` in the order
implies ``i <= j`` as integers. Every prefix ``0..i`` is therefore a down-set.
"""

import heapq
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from ..constants import ERROR_MESSAGES, LOG_MESSAGES
from .exceptions import CycleError, InvalidPosetError, SizeError

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Return the bitmask with the given indices set."""
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


@dataclass(frozen=True)
class Poset:
    """A finite partial order.

    ``down[j]`` is the bitmask of every ``i`` with ``x_i <= x_j``.
    """

    n: int
    down: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n != len(self.down):
            raise InvalidPosetError(
                ERROR_MESSAGES["not_partial_order"].format(
                    reason=f"{len(self.down)} down-sets for {self.n} elements"
                )
            )
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidPosetError(
                ERROR_MESSAGES["not_partial_order"].format(
                    reason=f"{len(self.labels)} labels for {self.n} elements"
                )
            )
        for j, mask in enumerate(self.down):
            if not mask >> j & 1:
                raise InvalidPosetError(
                    ERROR_MESSAGES["not_partial_order"].format(
                        reason=f"element {j} is not below itself"
                    )
                )
            if mask >> (j + 1):
                i = mask.bit_length() - 1
                raise InvalidPosetError(
                    ERROR_MESSAGES["not_linear_extension"].format(i=i, j=j)
                )
            for k in iter_bits(mask):
                if self.down[k] & ~mask:
                    raise InvalidPosetError(
                        ERROR_MESSAGES["not_partial_order"].format(
                            reason=f"not transitive through {k} below {j}"
                        )
                    )

    def __len__(self) -> int:
        return self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def leq(self, i: int, j: int) -> bool:
        """Return True when ``x_i <= x_j``."""
        self._check_index(i)
        self._check_index(j)
        return bool(self.down[j] >> i & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    @property
    def relation(self) -> tuple[tuple[bool, ...], ...]:
        """The order as an n x n boolean matrix."""
        return tuple(
            tuple(bool(self.down[j] >> i & 1) for j in range(self.n))
            for i in range(self.n)
        )

    @cached_property
    def up(self) -> tuple[int, ...]:
        """``up[i]`` is the bitmask of every ``j`` with ``x_i <= x_j``."""
        up = [0] * self.n
        for j, mask in enumerate(self.down):
            for i in iter_bits(mask):
                up[i] |= 1 << j
        return tuple(up)

    @cached_property
    def lower_cover_masks(self) -> tuple[int, ...]:
        strict = [mask & ~(1 << j) for j, mask in enumerate(self.down)]
        masks = []
        for below in strict:
            covered = below
            for k in iter_bits(below):
                covered &= ~strict[k]
            masks.append(covered)
        return tuple(masks)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Transitive reduction as sorted (lower, upper) pairs."""
        pairs = [
            (i, j)
            for j, mask in enumerate(self.lower_cover_masks)
            for i in iter_bits(mask)
        ]
        return tuple(sorted(pairs))

    def lower_covers(self, j: int) -> frozenset[int]:
        """Elements covered by ``x_j``."""
        self._check_index(j)
        return frozenset(iter_bits(self.lower_cover_masks[j]))

    def upper_covers(self, i: int) -> frozenset[int]:
        """Elements covering ``x_i``."""
        self._check_index(i)
        return frozenset(
            j
            for j in iter_bits(self.up[i])
            if self.lower_cover_masks[j] >> i & 1
        )

    def order_ideal(self, idxs: Iterable[int]) -> frozenset[int]:
        """Downward closure of ``idxs``."""
        mask = 0
        for index in idxs:
            self._check_index(index)
            mask |= self.down[index]
        return frozenset(iter_bits(mask))

    def order_filter(self, idxs: Iterable[int]) -> frozenset[int]:
        mask = 0
        for index in idxs:
            self._check_index(index)
            mask |= self.up[index]
        return frozenset(iter_bits(mask))

    @cached_property
    def heights(self) -> tuple[int, ...]:
        heights: list[int] = []
        for mask in self.lower_cover_masks:
            heights.append(max((heights[i] + 1 for i in iter_bits(mask)), default=0))
        return tuple(heights)

    def height(self, i: int) -> int:
        """Length of the longest chain ending at ``x_i``."""
        self._check_index(i)
        return self.heights[i]

    def minimal_elements(self) -> frozenset[int]:
        return frozenset(j for j in range(self.n) if not self.lower_cover_masks[j])

    def maximal_elements(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if self.up[i] == 1 << i)

    def bottom(self) -> int | None:
        """Index of the least element, or None."""
        if self.n and self.up[0] == self.full_mask:
            return 0
        return None

    def top(self) -> int | None:
        """Index of the greatest element, or None."""
        if self.n and self.down[-1] == self.full_mask:
            return self.n - 1
        return None

    def meet(self, i: int, j: int) -> int | None:
        """Greatest lower bound of ``x_i`` and ``x_j``, or None."""
        self._check_index(i)
        self._check_index(j)
        common = self.down[i] & self.down[j]
        if not common:
            return None
        candidate = common.bit_length() - 1
        return candidate if self.down[candidate] == common else None

    def join(self, i: int, j: int) -> int | None:
        """Least upper bound of ``x_i`` and ``x_j``, or None."""
        self._check_index(i)
        self._check_index(j)
        common = self.up[i] & self.up[j]
        if not common:
            return None
        candidate = (common & -common).bit_length() - 1
        return candidate if self.up[candidate] == common else None

    def is_meet_semilattice(self) -> bool:
        """True when every pair has a greatest lower bound."""
        return all(
            self.meet(i, j) is not None
            for j in range(self.n)
            for i in range(j)
        )

    def is_join_semilattice(self) -> bool:
        return all(
            self.join(i, j) is not None
            for j in range(self.n)
            for i in range(j)
        )

    def is_lattice(self) -> bool:
        return self.is_meet_semilattice() and self.is_join_semilattice()

    def meet_table(self) -> tuple[tuple[int | None, ...], ...]:
        return tuple(
            tuple(self.meet(i, j) for j in range(self.n)) for i in range(self.n)
        )

    def join_table(self) -> tuple[tuple[int | None, ...], ...]:
        return tuple(
            tuple(self.join(i, j) for j in range(self.n)) for i in range(self.n)
        )

    def is_chain(self) -> bool:
        return all(self.down[j] == (1 << (j + 1)) - 1 for j in range(self.n))

    def label(self, i: int) -> str:
        self._check_index(i)
        return self.labels[i] if self.labels is not None else str(i)

    def induced_subposet(self, idxs: Iterable[int]) -> "Poset":
        """Restriction of the order to ``idxs``, keeping their relative order."""
        keep = sorted(set(idxs))
        for index in keep:
            self._check_index(index)
        position = {old: new for new, old in enumerate(keep)}
        down = tuple(
            mask_of(position[i] for i in iter_bits(self.down[old]) if i in position)
            for old in keep
        )
        labels = (
            tuple(self.labels[old] for old in keep) if self.labels is not None else None
        )
        return Poset(len(keep), down, labels)

    def relabel(self, permutation: Sequence[int]) -> "Poset":
        """Move element ``i`` to position ``permutation[i]``.

        The result is re-indexed to a linear extension when the permutation
        breaks the order.
        """
        if sorted(permutation) != list(range(self.n)):
            raise ValueError(f"Not a permutation of 0..{self.n - 1}: {permutation}")
        covers = [(permutation[i], permutation[j]) for i, j in self.covers]
        labels = None
        if self.labels is not None:
            moved = [""] * self.n
            for old, new in enumerate(permutation):
                moved[new] = self.labels[old]
            labels = moved
        return build_poset(self.n, covers, labels)

    def _check_index(self, index: int) -> None:
        if not 0 <= index < self.n:
            raise IndexError(ERROR_MESSAGES["index_range"].format(index=index, n=self.n))


def linear_extension(down: Sequence[int]) -> list[int]:
    """Topological order of an acyclic down-set relation, ties by index."""
    n = len(down)
    pending = [(mask & ~(1 << j)).bit_count() for j, mask in enumerate(down)]
    above: list[list[int]] = [[] for _ in range(n)]
    for j, mask in enumerate(down):
        for i in iter_bits(mask & ~(1 << j)):
            above[i].append(j)

    ready = [j for j in range(n) if pending[j] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        for j in above[i]:
            pending[j] -= 1
            if pending[j] == 0:
                heapq.heappush(ready, j)
    return order


def reindex(
    down: Sequence[int], order: Sequence[int], labels: Sequence[str] | None = None
) -> Poset:
    """Build the poset whose element ``k`` is the old element ``order[k]``."""
    position = {old: new for new, old in enumerate(order)}
    new_down = [0] * len(order)
    for old, mask in enumerate(down):
        new_down[position[old]] = mask_of(position[i] for i in iter_bits(mask))
    new_labels = tuple(labels[old] for old in order) if labels is not None else None
    return Poset(len(order), tuple(new_down), new_labels)


def transitive_closure(n: int, covers: Iterable[tuple[int, int]]) -> list[int]:
    """Down-set masks of the reflexive-transitive closure of ``covers``.

    Raises CycleError when the closure is not antisymmetric.
    """
    down = [1 << i for i in range(n)]
    for i, j in covers:
        for index in (i, j):
            if not 0 <= index < n:
                raise IndexError(ERROR_MESSAGES["index_range"].format(index=index, n=n))
        if i == j:
            raise CycleError(i, j)
        down[j] |= 1 << i

    for k in range(n):
        for i in range(n):
            if down[i] >> k & 1:
                down[i] |= down[k]

    for j in range(n):
        for i in iter_bits(down[j] & ~(1 << j)):
            if down[i] >> j & 1:
                raise CycleError(i, j)
    return down


def build_poset(
    n: int,
    covers: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Poset:
    """Build a poset from (lower, upper) cover pairs.

    Elements are re-indexed to a linear extension when the input indexing is
    not one; ties are broken by ascending input index.
    """
    if n < 0:
        raise SizeError("build_poset", n, 0, minimum=True)
    if labels is not None and len(labels) != n:
        raise ValueError(f"Expected {n} labels, got {len(labels)}")
    down = transitive_closure(n, covers)
    order = linear_extension(down)
    if order != list(range(n)):
        logger.debug(LOG_MESSAGES["poset_reindexed"].format(n=n))
    return reindex(down, order, labels)


def chain(n: int) -> Poset:
    """The n-element chain."""
    return build_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return build_poset(n, [])

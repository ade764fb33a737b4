"""Canonical forms of posets up to isomorphism.

Elements are first split into cells by an isomorphism-invariant colour
refinement (height, degrees, up/down-set sizes, then neighbour colours).
Ties are broken by individualizing one element of the first non-singleton
cell and refining again. The canonical labeling is the leaf of that search
tree whose order relation, read column by column, is lexicographically
smallest. Twins (elements with the same strict down-set and up-set) are
interchangeable, so only one of them is individualized at each node.
"""

from collections.abc import Hashable, Sequence
from dataclasses import dataclass

from ..utils.config import get_settings
from .exceptions import SizeError
from .poset import Poset, iter_bits, mask_of, reindex


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Byte encoding of a poset that is equal exactly for isomorphic posets."""

    encoding: bytes

    def hex(self) -> str:
        return self.encoding.hex()

    @property
    def size(self) -> int:
        return self.encoding[0] if self.encoding else 0


def _rank(values: Sequence[Hashable]) -> list[int]:
    table = {value: rank for rank, value in enumerate(sorted(set(values)))}  # type: ignore[type-var]
    return [table[value] for value in values]


def _neighbours(poset: Poset) -> tuple[list[list[int]], list[list[int]]]:
    lower = [list(iter_bits(mask)) for mask in poset.lower_cover_masks]
    upper: list[list[int]] = [[] for _ in range(poset.n)]
    for j, below in enumerate(lower):
        for i in below:
            upper[i].append(j)
    return lower, upper


def _refine(
    colors: list[int], lower: list[list[int]], upper: list[list[int]]
) -> list[int]:
    colors = _rank(colors)
    while True:
        signature = [
            (
                colors[i],
                tuple(sorted(colors[k] for k in lower[i])),
                tuple(sorted(colors[k] for k in upper[i])),
            )
            for i in range(len(colors))
        ]
        refined = _rank(signature)
        if len(set(refined)) == len(set(colors)):
            return refined
        colors = refined


def refined_colors(poset: Poset) -> list[int]:
    """Stable colour of every element; colours are ordered by height first."""
    lower, upper = _neighbours(poset)
    initial = [
        (
            poset.heights[i],
            len(lower[i]),
            len(upper[i]),
            poset.down[i].bit_count(),
            poset.up[i].bit_count(),
        )
        for i in range(poset.n)
    ]
    return _refine(_rank(initial), lower, upper)


def _columns(poset: Poset, order: Sequence[int]) -> tuple[int, ...]:
    position = {old: new for new, old in enumerate(order)}
    return tuple(
        mask_of(position[i] for i in iter_bits(poset.down[old])) for old in order
    )


def _twin_class(poset: Poset, i: int) -> tuple[int, int]:
    bit = 1 << i
    return poset.down[i] & ~bit, poset.up[i] & ~bit


def canonical_labeling(poset: Poset, max_size: int | None = None) -> tuple[int, ...]:
    """Old indices listed in canonical position order."""
    limit = max_size if max_size is not None else get_settings().canonical_max_size
    if poset.n > limit:
        raise SizeError("canonicalize", poset.n, limit)

    lower, upper = _neighbours(poset)
    best_order: tuple[int, ...] = tuple(range(poset.n))
    best_columns: tuple[int, ...] | None = None

    stack = [refined_colors(poset)]
    while stack:
        colors = stack.pop()
        if len(set(colors)) == poset.n:
            order = tuple(sorted(range(poset.n), key=colors.__getitem__))
            columns = _columns(poset, order)
            if best_columns is None or columns < best_columns:
                best_order, best_columns = order, columns
            continue

        counts: dict[int, int] = {}
        for color in colors:
            counts[color] = counts.get(color, 0) + 1
        target = min(color for color, count in counts.items() if count > 1)
        seen: set[tuple[int, int]] = set()
        for v in range(poset.n):
            if colors[v] != target or _twin_class(poset, v) in seen:
                continue
            seen.add(_twin_class(poset, v))
            split = [2 * c + (0 if i == v else 1) for i, c in enumerate(colors)]
            stack.append(_refine(split, lower, upper))
    return best_order


def _encode(form: Poset) -> CanonicalKey:
    width = max(1, (form.n + 7) // 8)
    return CanonicalKey(
        bytes([form.n]) + b"".join(mask.to_bytes(width, "big") for mask in form.down)
    )


def canonicalize(poset: Poset, max_size: int | None = None) -> CanonicalKey:
    """Canonical key of ``poset``; SizeError above the configured ceiling."""
    return canonical_form_with_key(poset, max_size)[0]


def canonical_form(poset: Poset, max_size: int | None = None) -> Poset:
    """The canonical representative of the isomorphism class of ``poset``."""
    order = canonical_labeling(poset, max_size)
    return reindex(poset.down, order, poset.labels)


def is_isomorphic(p: Poset, q: Poset, max_size: int | None = None) -> bool:
    if p.n != q.n or len(p.covers) != len(q.covers):
        return False
    return canonicalize(p, max_size) == canonicalize(q, max_size)


def canonical_form_with_key(
    poset: Poset, max_size: int | None = None
) -> tuple[CanonicalKey, Poset]:
    """Canonical key and representative from a single labeling search."""
    order = canonical_labeling(poset, max_size)
    form = reindex(poset.down, order, poset.labels)
    return _encode(form), form

"""Catalog of named meet semilattices with their Mobius vectors.

Each entry holds the cover relations of a class, the values
mu(x_i, x_n) for its distinguished last element, and the function classes
that are sufficient for invertibility on that class.
"""

import json
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from importlib import resources
from typing import Any

from ..constants import CATALOG_RESOURCE, LOG_MESSAGES
from ..invertibility import max_cover_degree
from ..posets import CanonicalKey, Poset, build_poset, canonicalize, mobius
from .exceptions import CatalogError, UnknownLabelError
from .generator import enumerate_meet_semilattices, filter_min_cover

logger = logging.getLogger(__name__)

BOUNDED_X1_LABELS = ("S_{n-2,n}", "S_{n−2,n}")


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    figure: int
    family: str
    aliases: tuple[str, ...]
    poset: Poset
    mobius_top: tuple[int, ...]
    requires: tuple[str, ...]

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CatalogEntry":
        n = int(data["n"])
        covers = [(int(i), int(j)) for i, j in data["covers"]]
        return cls(
            label=data["label"],
            figure=int(data["figure"]),
            family=data["family"],
            aliases=tuple(data.get("aliases", ())),
            poset=build_poset(n, covers),
            mobius_top=tuple(int(v) for v in data["mobius_top"]),
            requires=tuple(data.get("requires", ())),
        )

    @property
    def n(self) -> int:
        return self.poset.n


def mobius_to_last(poset: Poset) -> tuple[int, ...]:
    """mu(x_i, x_n) for every i."""
    mu = mobius(poset)
    last = poset.n - 1
    return tuple(int(mu(i, last)) for i in range(poset.n))


def bounded_x1_fixture(n: int) -> Poset:
    """x_1 below n-2 pairwise incomparable atoms, all below x_n."""
    if n < 3:
        raise ValueError(f"The bounded x_1-set needs n >= 3, got {n}")
    atoms = range(1, n - 1)
    return build_poset(n, [(0, k) for k in atoms] + [(k, n - 1) for k in atoms])


class SemilatticeCatalog:
    """Labeled fixtures, pairwise non-isomorphic."""

    def __init__(self, entries: Sequence[CatalogEntry]):
        """Index entries by label and alias."""
        self.entries = {entry.label: entry for entry in entries}
        if len(self.entries) != len(entries):
            raise CatalogError("catalog", "duplicate labels")
        self.aliases: dict[str, str] = {}
        for entry in entries:
            for alias in entry.aliases:
                if alias in self.entries or alias in self.aliases:
                    raise CatalogError(alias, "alias collides with another label")
                self.aliases[alias] = entry.label

    @classmethod
    def load(cls) -> "SemilatticeCatalog":
        text = (
            resources.files("latmat.enumeration")
            .joinpath("data")
            .joinpath(CATALOG_RESOURCE)
            .read_text(encoding="utf-8")
        )
        data = json.loads(text)
        catalog = cls([CatalogEntry.from_dict(item) for item in data["entries"]])
        logger.info(LOG_MESSAGES["catalog_loaded"].format(count=len(catalog)))
        return catalog

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries.values())

    def __contains__(self, label: object) -> bool:
        return label in self.entries or label in self.aliases

    def resolve(self, label: str) -> str:
        if label in self.entries:
            return label
        if label in self.aliases:
            return self.aliases[label]
        raise UnknownLabelError(label)

    def __getitem__(self, label: str) -> CatalogEntry:
        return self.entries[self.resolve(label)]

    def labels(self) -> list[str]:
        return list(self.entries)

    def by_figure(self, figure: int) -> list[CatalogEntry]:
        return [entry for entry in self if entry.figure == figure]

    def by_family(self, family: str) -> list[CatalogEntry]:
        return [entry for entry in self if entry.family == family]

    @cached_property
    def by_key(self) -> dict[CanonicalKey, str]:
        index: dict[CanonicalKey, str] = {}
        for entry in self:
            key = canonicalize(entry.poset)
            if key in index:
                raise CatalogError(
                    entry.label, f"isomorphic to {index[key]}"
                )
            index[key] = entry.label
        return index

    @cached_property
    def max_size(self) -> int:
        return max(entry.n for entry in self)

    def classify(self, poset: Poset) -> str | None:
        """Label of the isomorphic fixture, or None."""
        if poset.n > self.max_size:
            return None
        return self.by_key.get(canonicalize(poset))

    def validate(self) -> None:
        """Check every fixture against its stored Mobius vector."""
        for entry in self:
            if not entry.poset.is_meet_semilattice():
                raise CatalogError(entry.label, "not a meet semilattice")
            computed = mobius_to_last(entry.poset)
            if computed != entry.mobius_top:
                raise CatalogError(
                    entry.label, f"Mobius vector {computed} != {entry.mobius_top}"
                )
            logger.debug(LOG_MESSAGES["catalog_validated"].format(label=entry.label))
        # Building the key index also checks the fixtures are non-isomorphic.
        _ = self.by_key


@lru_cache
def get_catalog() -> SemilatticeCatalog:
    """Load and validate the shipped catalog once."""
    catalog = SemilatticeCatalog.load()
    catalog.validate()
    return catalog


def classify(poset: Poset) -> str | None:
    return get_catalog().classify(poset)


def verify_figure_mobius(label: str, n: int | None = None) -> bool:
    """Recompute mu(x_i, x_n) for a catalog class and compare with the stored vector.

    The parametric class S_{n-2,n} takes its size from ``n`` (default 7).
    """
    if label in BOUNDED_X1_LABELS:
        size = n if n is not None else 7
        expected = (size - 3,) + (-1,) * (size - 2) + (1,)
        return mobius_to_last(bounded_x1_fixture(size)) == expected
    entry = get_catalog()[label]
    return mobius_to_last(entry.poset) == entry.mobius_top


def required_function_classes(label: str) -> tuple[str, ...]:
    """Function classes sufficient for invertibility on every set of this class."""
    if label in BOUNDED_X1_LABELS:
        return ("G_{n-2,n}",)
    return get_catalog()[label].requires


def sufficient_classes(poset: Poset) -> tuple[str, ...] | None:
    """Sufficient function classes for any meet semilattice, when known.

    Catalogued classes use their entry; otherwise the bound on cover counts
    decides (F_1 for at most one cover, F_2 for at most two).
    """
    label = classify(poset)
    if label is not None:
        return get_catalog()[label].requires
    degree = max_cover_degree(poset)
    if degree <= 1:
        return ("F_1",) if poset.n > 1 else ()
    if degree == 2:
        return ("F_2",)
    return None


def unclassified(n: int, k: int = 3, threads: int | None = None) -> list[Poset]:
    """Semilattices with a k-cover element that no catalog label matches."""
    catalog = get_catalog()
    semis = filter_min_cover(enumerate_meet_semilattices(n, threads=threads), k)
    return [poset for poset in semis if catalog.classify(poset) is None]


def catalog_completeness(n: int, k: int = 3, threads: int | None = None) -> bool:
    return not unclassified(n, k, threads)

"""Ambient lattices: finite abstract lattices and the divisor lattice."""

import math
from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from ..posets import Poset, build_poset, linear_extension
from ..utils.config import get_settings
from .exceptions import (
    DuplicateError,
    LatticeTableError,
    NonPositiveError,
    NotInAmbientError,
)

KIND_DIVISOR = "divisor"
KIND_ABSTRACT = "abstract"


class AmbientLattice(ABC):
    """Meet and join provider for element sets S."""

    kind: str

    @abstractmethod
    def meet(self, a: int, b: int) -> int: ...

    @abstractmethod
    def join(self, a: int, b: int) -> int: ...

    @abstractmethod
    def leq(self, a: int, b: int) -> bool: ...

    @abstractmethod
    def check_element(self, a: int) -> None:
        """Raise unless ``a`` is an element of the lattice."""

    def contains(self, a: int) -> bool:
        try:
            self.check_element(a)
        except (NonPositiveError, NotInAmbientError):
            return False
        return True

    def check_distinct(self, elements: Iterable[int]) -> list[int]:
        seen: set[int] = set()
        checked = []
        for element in elements:
            self.check_element(element)
            if element in seen:
                raise DuplicateError(element)
            seen.add(element)
            checked.append(element)
        return checked

    def order_elements(self, elements: Sequence[int]) -> tuple[int, ...]:
        """Linear extension of the induced order, ties by input position."""
        down = [
            sum(1 << i for i, a in enumerate(elements) if self.leq(a, b))
            for b in elements
        ]
        return tuple(elements[k] for k in linear_extension(down))

    def induced_poset(self, elements: Sequence[int]) -> Poset:
        """Order induced on ``elements``, which must already be ordered."""
        n = len(elements)
        down = tuple(
            sum(1 << i for i in range(j + 1) if self.leq(elements[i], elements[j]))
            for j in range(n)
        )
        return Poset(n, down, tuple(self.format_element(a) for a in elements))

    def format_element(self, a: int) -> str:
        return str(a)


@dataclass(frozen=True)
class DivisorLattice(AmbientLattice):
    """Positive integers under divisibility: meet is gcd, join is lcm."""

    kind: str = field(default=KIND_DIVISOR, init=False)

    def meet(self, a: int, b: int) -> int:
        return math.gcd(a, b)

    def join(self, a: int, b: int) -> int:
        return math.lcm(a, b)

    def leq(self, a: int, b: int) -> bool:
        return b % a == 0

    def check_element(self, a: int) -> None:
        if isinstance(a, bool) or not isinstance(a, int) or a <= 0:
            raise NonPositiveError(a)

    def order_elements(self, elements: Sequence[int]) -> tuple[int, ...]:
        return tuple(sorted(elements))


@dataclass(frozen=True)
class AbstractLattice(AmbientLattice):
    """A finite lattice given by its poset and total meet and join tables.

    Elements are the indices of the poset.
    """

    poset: Poset
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    verify: bool = True
    kind: str = field(default=KIND_ABSTRACT, init=False)

    def __post_init__(self) -> None:
        n = self.poset.n
        if n == 0:
            raise LatticeTableError("a lattice needs at least one element")
        for name, table in (("meet", self.meet_table), ("join", self.join_table)):
            if len(table) != n or any(len(row) != n for row in table):
                raise LatticeTableError(f"{name} table is not {n} x {n}")
            if any(not 0 <= value < n for row in table for value in row):
                raise LatticeTableError(f"{name} table has an entry outside 0..{n - 1}")
        if self.verify and n <= get_settings().abstract_check_max_size:
            self._verify_tables()

    def _verify_tables(self) -> None:
        down, up = self.poset.down, self.poset.up
        for a in range(self.poset.n):
            for b in range(self.poset.n):
                m = self.meet_table[a][b]
                if down[m] != down[a] & down[b]:
                    raise LatticeTableError(
                        f"meet({a}, {b}) = {m} is not the greatest lower bound"
                    )
                j = self.join_table[a][b]
                if up[j] != up[a] & up[b]:
                    raise LatticeTableError(
                        f"join({a}, {b}) = {j} is not the least upper bound"
                    )

    @classmethod
    def from_poset(cls, poset: Poset) -> "AbstractLattice":
        """Tabulate meets and joins of a poset that is a lattice."""
        tables: dict[str, list[tuple[int, ...]]] = {"meet": [], "join": []}
        for name, operation in (("meet", poset.meet), ("join", poset.join)):
            for a in range(poset.n):
                row = []
                for b in range(poset.n):
                    value = operation(a, b)
                    if value is None:
                        raise LatticeTableError(f"elements {a} and {b} have no {name}")
                    row.append(value)
                tables[name].append(tuple(row))
        return cls(
            poset, tuple(tables["meet"]), tuple(tables["join"]), verify=False
        )

    @classmethod
    def from_meet_semilattice(cls, poset: Poset) -> "AbstractLattice":
        """The lattice of ``poset``, adjoining a new greatest element if it has none."""
        if poset.n and poset.top() is not None:
            return cls.from_poset(poset)
        n = poset.n
        covers = list(poset.covers) + [(i, n) for i in poset.maximal_elements()]
        labels = None
        if poset.labels is not None:
            labels = list(poset.labels) + ["top"]
        return cls.from_poset(build_poset(n + 1, covers, labels))

    @property
    def n(self) -> int:
        return self.poset.n

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def check_element(self, a: int) -> None:
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < self.poset.n:
            raise NotInAmbientError(a)

    def format_element(self, a: int) -> str:
        return self.poset.label(a)

    def order_ideal(self, elements: Iterable[int]) -> frozenset[int]:
        return self.poset.order_ideal(elements)

    def elements(self) -> range:
        return range(self.poset.n)


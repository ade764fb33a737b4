"""Valued element sets S = {x_1, ..., x_n} with a valuation f, and closures."""

import logging
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy import divisors

from ..constants import (
    DEFAULT_SAMPLE_BOUND,
    SCOPE_EXHAUSTIVE,
    SCOPE_PAIRS_OF_S,
    SCOPE_SAMPLED,
)
from ..posets import Poset
from .ambient import AbstractLattice, AmbientLattice, DivisorLattice
from .exceptions import NotMeetClosedError
from .valuation import BuiltinN, Valuation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ValuedSet:
    """An ordered element set of an ambient lattice with a valuation.

    The elements are ordered by a linear extension of the induced order, and
    ``f`` is known to be evaluable at every element, pairwise meet and
    pairwise join.
    """

    ambient: AmbientLattice
    elements: tuple[int, ...]
    f: Valuation
    induced: Poset

    @classmethod
    def create(
        cls,
        ambient: AmbientLattice,
        elements: Iterable[int],
        f: Valuation | None = None,
        *,
        validate: bool = True,
    ) -> "ValuedSet":
        checked = ambient.check_distinct(elements)
        ordered = ambient.order_elements(checked)
        valuation = f if f is not None else BuiltinN()
        valued = cls(ambient, ordered, valuation, ambient.induced_poset(ordered))
        if validate:
            valued.check_valuation()
        return valued

    @classmethod
    def divisor(
        cls, ints: Iterable[int], f: Valuation | None = None
    ) -> "ValuedSet":
        """Shorthand for a set of positive integers in the divisor lattice."""
        return cls.create(DivisorLattice(), ints, f)

    def check_valuation(self) -> None:
        """Evaluate f on S, pairwise meets and pairwise joins."""
        for j, b in enumerate(self.elements):
            self.f(b)
            for a in self.elements[:j]:
                self.f(self.ambient.meet(a, b))
                self.f(self.ambient.join(a, b))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def n(self) -> int:
        return len(self.elements)

    def index_of(self, x: int) -> int:
        try:
            return self.elements.index(x)
        except ValueError:
            raise IndexError(f"{x} is not an element of the set") from None

    def value(self, i: int) -> Fraction:
        return self.f(self.elements[i])

    def values(self) -> tuple[Fraction, ...]:
        return tuple(self.f(x) for x in self.elements)

    def meet(self, i: int, j: int) -> int:
        return self.ambient.meet(self.elements[i], self.elements[j])

    def join(self, i: int, j: int) -> int:
        return self.ambient.join(self.elements[i], self.elements[j])

    def with_valuation(self, f: Valuation) -> "ValuedSet":
        valued = ValuedSet(self.ambient, self.elements, f, self.induced)
        valued.check_valuation()
        return valued

    def prefix(self, i: int) -> "ValuedSet":
        """S_i = {x_1, ..., x_i}."""
        return ValuedSet(
            self.ambient,
            self.elements[:i],
            self.f,
            self.induced.induced_subposet(range(i)),
        )

    def labels(self) -> tuple[str, ...]:
        return tuple(self.ambient.format_element(x) for x in self.elements)

    def first_missing_meet(self) -> tuple[int, int, int] | None:
        present = set(self.elements)
        for j, b in enumerate(self.elements):
            for a in self.elements[:j]:
                m = self.ambient.meet(a, b)
                if m not in present:
                    return a, b, m
        return None

    def is_meet_closed(self) -> bool:
        return self.first_missing_meet() is None

    def require_meet_closed(self) -> None:
        missing = self.first_missing_meet()
        if missing is not None:
            raise NotMeetClosedError(*missing)


def divisor_subposet(ints: Iterable[int]) -> Poset:
    """Divisibility order on distinct positive integers, ascending."""
    ambient = DivisorLattice()
    ordered = ambient.order_elements(ambient.check_distinct(ints))
    return ambient.induced_poset(ordered)


def _closure(
    ambient: AmbientLattice, elements: Iterable[int], operation: str
) -> tuple[int, ...]:
    closed = ambient.check_distinct(set(elements))
    current = set(closed)
    combine = ambient.meet if operation == "meet" else ambient.join
    frontier = set(current)
    while frontier:
        added = {combine(a, b) for a in frontier for b in current} - current
        current |= added
        frontier = added
    return _ascending(ambient, current)


def _ascending(ambient: AmbientLattice, elements: Iterable[int]) -> tuple[int, ...]:
    if isinstance(ambient, AbstractLattice):
        return tuple(sorted(elements))
    return ambient.order_elements(list(elements))


def meet_closure(ambient: AmbientLattice, elements: Iterable[int]) -> tuple[int, ...]:
    """Smallest meet-closed superset of ``elements``."""
    return _closure(ambient, elements, "meet")


def join_closure(ambient: AmbientLattice, elements: Iterable[int]) -> tuple[int, ...]:
    return _closure(ambient, elements, "join")


def is_meet_closed(ambient: AmbientLattice, elements: Iterable[int]) -> bool:
    present = set(ambient.check_distinct(elements))
    return all(ambient.meet(a, b) in present for a in present for b in present)


def is_join_closed(ambient: AmbientLattice, elements: Iterable[int]) -> bool:
    present = set(ambient.check_distinct(elements))
    return all(ambient.join(a, b) in present for a in present for b in present)


def is_lower_closed(ambient: AmbientLattice, elements: Iterable[int]) -> bool:
    """True when every element below a member is a member."""
    present = set(ambient.check_distinct(elements))
    if isinstance(ambient, AbstractLattice):
        return ambient.order_ideal(present) == present
    return all(int(d) in present for x in present for d in divisors(x))


def is_a_set(ambient: AmbientLattice, elements: Sequence[int], a: int) -> bool:
    """True when x_i meet x_j = a for all i != j."""
    checked = ambient.check_distinct(elements)
    ambient.check_element(a)
    return all(
        ambient.meet(x, y) == a
        for j, y in enumerate(checked)
        for x in checked[:j]
    )


@dataclass(frozen=True)
class SemimultiplicativityResult:
    """Outcome of a semimultiplicativity test and what it covered."""

    holds: bool
    witness: tuple[int, int] | None
    scope: str
    tested: int

    def __bool__(self) -> bool:
        return self.holds


def _first_failure(
    ambient: AmbientLattice, f: Valuation, pairs: Iterable[tuple[int, int]]
) -> tuple[tuple[int, int] | None, int]:
    tested = 0
    for x, y in pairs:
        tested += 1
        if f(x) * f(y) != f(ambient.meet(x, y)) * f(ambient.join(x, y)):
            return (x, y), tested
    return None, tested


def is_semimultiplicative(
    ambient: AmbientLattice,
    f: Valuation,
    elements: Sequence[int] | None = None,
    *,
    sample: int | None = None,
    seed: int = 0,
    bound: int = DEFAULT_SAMPLE_BOUND,
) -> SemimultiplicativityResult:
    """Test f(x)f(y) = f(x meet y)f(x join y).

    Over all pairs of ``elements`` when given, exhaustively on an abstract
    lattice, or on ``sample`` random pairs below ``bound`` in the divisor
    lattice.
    """
    if elements is not None:
        ordered = ambient.order_elements(ambient.check_distinct(elements))
        pairs: Iterable[tuple[int, int]] = (
            (x, y) for j, y in enumerate(ordered) for x in ordered[:j]
        )
        scope = SCOPE_PAIRS_OF_S
    elif isinstance(ambient, AbstractLattice):
        pairs = ((x, y) for y in ambient.elements() for x in range(y))
        scope = SCOPE_EXHAUSTIVE
    elif sample is not None:
        rng = random.Random(seed)
        pairs = [(rng.randint(1, bound), rng.randint(1, bound)) for _ in range(sample)]
        scope = SCOPE_SAMPLED
    else:
        raise ValueError("The divisor lattice is infinite: pass elements or sample")

    witness, tested = _first_failure(ambient, f, pairs)
    return SemimultiplicativityResult(witness is None, witness, scope, tested)

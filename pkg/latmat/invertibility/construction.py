"""Construction sequences, condition values and invertibility reports.

Steps are numbered from 1: step ``i`` adds ``x_i`` to S_{i-1}, covering
``m_i`` elements of S_{i-1}, and passes when the condition value
c_i = (1/f * mu_S)(x_i) is nonzero.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from ..constants import (
    LOG_MESSAGES,
    SCOPE_JOIN,
    SCOPE_MEET_ONLY,
    VERDICT_INVERTIBLE,
    VERDICT_SINGULAR,
)
from ..lattice import NotSemimultiplicativeError, ValuedSet, is_semimultiplicative
from ..matrices import det_meet_via_convolution, determinant, meet_matrix
from ..posets import Poset
from .exceptions import ShapeError, ZeroDenominatorError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructionSequence:
    """Per-step cover counts m_i and covered steps."""

    elements: tuple[int, ...]
    m: tuple[int, ...]
    covered: tuple[tuple[int, ...], ...]

    def multiset(self) -> Counter[int]:
        return Counter(self.m)


@dataclass(frozen=True)
class ConstructionStep:
    i: int
    element: int
    m: int
    covered: tuple[int, ...]
    condition_value: Fraction

    @property
    def passed(self) -> bool:
        return self.condition_value != 0


@dataclass(frozen=True)
class InvertibilityReport:
    """Step-by-step verdict of the inductive method."""

    steps: tuple[ConstructionStep, ...]
    verdict: str
    first_failure: int | None
    det_core: Fraction
    scope: str

    @property
    def invertible(self) -> bool:
        return self.verdict == VERDICT_INVERTIBLE


@dataclass(frozen=True)
class MethodProfile:
    """Sorted cover counts of a construction and the largest one."""

    multiset: tuple[int, ...]
    largest: int


def construction_sequence(vs: ValuedSet) -> ConstructionSequence:
    """m_i and covered steps for each prefix S_i of a meet-closed set."""
    vs.require_meet_closed()
    covered = tuple(
        tuple(sorted(k + 1 for k in vs.induced.lower_covers(i)))
        for i in range(vs.n)
    )
    return ConstructionSequence(
        vs.elements, tuple(len(c) for c in covered), covered
    )


def condition_values(vs: ValuedSet) -> tuple[Fraction, ...]:
    """c_i = sum of (1/f)(x_k) mu_S(x_k, x_i) over x_k <= x_i."""
    return det_meet_via_convolution(vs, vs.f.reciprocal()).values


def invertibility_report(
    vs: ValuedSet, *, require_join: bool = True
) -> InvertibilityReport:
    """Run the inductive method on a meet-closed valued set.

    When f is not semimultiplicative on the pairs of S the verdict only
    speaks about (S)_{1/f}; that raises NotSemimultiplicativeError unless
    ``require_join`` is False, in which case the report scope says so.
    """
    sequence = construction_sequence(vs)
    check = is_semimultiplicative(vs.ambient, vs.f, vs.elements)
    scope = SCOPE_JOIN
    if check.witness is not None:
        if require_join:
            raise NotSemimultiplicativeError(check.witness)
        scope = SCOPE_MEET_ONLY
        logger.info(LOG_MESSAGES["report_scope"].format(scope=scope))

    values = condition_values(vs)
    steps = tuple(
        ConstructionStep(i + 1, x, sequence.m[i], sequence.covered[i], values[i])
        for i, x in enumerate(vs.elements)
    )
    first_failure = next((step.i for step in steps if not step.passed), None)
    det_core = Fraction(1)
    for value in values:
        det_core *= value
    return InvertibilityReport(
        steps,
        VERDICT_INVERTIBLE if first_failure is None else VERDICT_SINGULAR,
        first_failure,
        det_core,
        scope,
    )


def max_cover_degree(poset: Poset) -> int:
    """Largest number of lower covers of any element."""
    return max((mask.bit_count() for mask in poset.lower_cover_masks), default=0)


def method_profile(source: ValuedSet | Poset) -> MethodProfile:
    poset = source.induced if isinstance(source, ValuedSet) else source
    counts = sorted(mask.bit_count() for mask in poset.lower_cover_masks)
    return MethodProfile(tuple(counts), counts[-1] if counts else 0)


def prefix_determinants(vs: ValuedSet) -> tuple[Fraction, ...]:
    """det (S_i)_{1/f} for i = 1..n, each by elimination."""
    g = vs.f.reciprocal()
    return tuple(
        determinant(meet_matrix(vs.prefix(i), g)) for i in range(1, vs.n + 1)
    )


def _covered_elements(vs: ValuedSet, x: int) -> frozenset[int]:
    i = vs.index_of(x)
    return frozenset(vs.elements[k] for k in vs.induced.lower_covers(i))


def condition_c1(vs: ValuedSet, x: int) -> bool:
    """f(x) != f(y) for the single element y covered by x."""
    covered = _covered_elements(vs, x)
    if len(covered) != 1:
        raise ShapeError("single-cover step", f"{x} covers {len(covered)} elements")
    (y,) = covered
    return vs.f(x) != vs.f(y)


def _check_two_cover(vs: ValuedSet, x: int, y1: int, y2: int) -> None:
    covered = _covered_elements(vs, x)
    if y1 not in covered or y2 not in covered:
        raise ShapeError("two-cover step", f"{x} does not cover both {y1} and {y2}")
    if y1 == y2 or vs.ambient.leq(y1, y2) or vs.ambient.leq(y2, y1):
        raise ShapeError("two-cover step", f"{y1} and {y2} are comparable")


def condition_c2_meet_form(vs: ValuedSet, x: int, y1: int, y2: int) -> bool:
    """1/f(x) != 1/f(y1) + 1/f(y2) - 1/f(y1 meet y2)."""
    _check_two_cover(vs, x, y1, y2)
    f = vs.f
    return 1 / f(x) != 1 / f(y1) + 1 / f(y2) - 1 / f(vs.ambient.meet(y1, y2))


def condition_c2_join_form(vs: ValuedSet, x: int, y1: int, y2: int) -> bool:
    """f(x) != f(y1) f(y2) / (f(y1) + f(y2) - f(y1 join y2))."""
    _check_two_cover(vs, x, y1, y2)
    f = vs.f
    join = vs.ambient.join(y1, y2)
    denominator = f(y1) + f(y2) - f(join)
    if denominator == 0:
        raise ZeroDenominatorError(y1, y2, join)
    return f(x) != f(y1) * f(y2) / denominator

"""Diagnosis of gcd-closed sets whose LCM matrix may be singular."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from ..enumeration import classify
from ..invertibility import InvertibilityReport, invertibility_report
from ..lattice import DivisorLattice, ValuedSet, is_meet_closed, meet_closure
from ..matrices import determinant, join_matrix
from .exceptions import RouteMismatchError

logger = logging.getLogger(__name__)

# Hong's 8-element set, of class S_{3,8}.
HONG_SET: tuple[int, ...] = (1, 2, 3, 5, 36, 230, 825, 227700)
# The earlier 9-element singular set.
NINE_ELEMENT_SET: tuple[int, ...] = (1, 2, 3, 4, 5, 6, 10, 45, 180)


@dataclass(frozen=True)
class CounterexampleDiagnosis:
    """Full f = N diagnosis of an LCM matrix on a set of integers.

    ``det_via_conditions`` and ``report`` are None when the set is not
    gcd-closed, because the inductive method needs a meet-closed set.
    """

    elements: tuple[int, ...]
    gcd_closed: bool
    label: str | None
    det: Fraction
    det_via_conditions: Fraction | None
    report: InvertibilityReport | None

    @property
    def singular(self) -> bool:
        return self.det == 0


def is_gcd_closed(ints: Iterable[int]) -> bool:
    return is_meet_closed(DivisorLattice(), ints)


def gcd_closure(ints: Iterable[int]) -> tuple[int, ...]:
    return meet_closure(DivisorLattice(), ints)


def verify_counterexample(ints: Iterable[int]) -> CounterexampleDiagnosis:
    """Determinant of [S] by elimination, cross-checked by condition values.

    Raises RouteMismatchError if the two determinant routes disagree.
    """
    vs = ValuedSet.divisor(ints)
    det = determinant(join_matrix(vs))
    if not vs.is_meet_closed():
        return CounterexampleDiagnosis(vs.elements, False, None, det, None, None)

    report = invertibility_report(vs)
    product = Fraction(1)
    for x in vs.elements:
        product *= x
    det_via_conditions = product * product * report.det_core
    if det_via_conditions != det:
        raise RouteMismatchError(vs.elements, det, det_via_conditions)
    return CounterexampleDiagnosis(
        vs.elements,
        True,
        classify(vs.induced),
        det,
        det_via_conditions,
        report,
    )


def pad_with_chain(ints: Iterable[int], extra: int) -> tuple[int, ...]:
    """Extend a gcd-closed set with ``extra`` elements top * 2^k above its top.

    Every added step covers one element and has a nonzero condition value,
    so a singular set stays singular at every larger size.
    """
    if extra < 0:
        raise ValueError(f"extra must be non-negative, got {extra}")
    elements = ValuedSet.divisor(ints).elements
    top = elements[-1]
    if any(top % x for x in elements):
        raise ValueError(f"{top} is not a common multiple of the set")
    return elements + tuple(top << k for k in range(1, extra + 1))

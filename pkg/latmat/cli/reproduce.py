"""Acceptance checks behind ``latmat reproduce-paper``."""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from ..constants import HONG_TARGET_LABEL
from ..enumeration import (
    BOUNDED_X1_LABELS,
    enumerate_meet_semilattices,
    filter_min_cover,
    get_catalog,
    verify_figure_mobius,
)
from ..invertibility import invertibility_report
from ..lattice import ValuedSet
from ..numtheory import (
    HONG_SET,
    NINE_ELEMENT_SET,
    SearchTemplate,
    class_inequality_instance,
    random_gcd_closed,
    search_singular,
    verify_counterexample,
)

logger = logging.getLogger(__name__)

SEMILATTICE_COUNTS = {1: 1, 2: 1, 3: 2, 4: 5, 5: 15, 6: 53, 7: 222}
MIN_COVER_COUNTS = {5: 1, 6: 7, 7: 47}
INEQUALITY_EXAMPLES = (
    ("g36", {"a": 2, "b": 3, "c": 2, "d": 5}, 60, Fraction(50, 60)),
    ("g47a", {"a": 2, "b": 3, "c": 3, "d": 2, "e": 5}, 60, Fraction(70, 60)),
    ("g47b", {"a": 2, "b": 3, "c": 7, "d": 5, "e": 2}, 420, Fraction(704, 420)),
)


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


def _counts(full: bool, threads: int | None) -> list[Check]:
    top = 7 if full else 6
    catalog = get_catalog()
    checks: list[Check] = []
    levels = {n: enumerate_meet_semilattices(n, threads=threads) for n in range(1, top + 1)}
    for n, level in levels.items():
        checks.append(
            Check(f"meet semilattices, n={n}", str(SEMILATTICE_COUNTS[n]), str(len(level)))
        )
    for n, expected in MIN_COVER_COUNTS.items():
        if n in levels:
            filtered = filter_min_cover(levels[n], 3)
            unlabeled = sum(catalog.classify(poset) is None for poset in filtered)
            checks.append(
                Check(f"with a 3-cover element, n={n}", str(expected), str(len(filtered)))
            )
            checks.append(Check(f"unlabeled classes, n={n}", "0", str(unlabeled)))
    return checks


def _counterexamples() -> list[Check]:
    hong = verify_counterexample(HONG_SET)
    first = hong.report.first_failure if hong.report is not None else None
    nine = verify_counterexample(NINE_ELEMENT_SET)
    return [
        Check("Hong's set is singular", "0", str(hong.det)),
        Check("Hong's set class", HONG_TARGET_LABEL, str(hong.label)),
        Check("Hong's set first failing step", "8", str(first)),
        Check("9-element set is singular", "0", str(nine.det)),
    ]


def _figures() -> list[Check]:
    labels = list(get_catalog().labels()) + [BOUNDED_X1_LABELS[0]]
    failed = [label for label in labels if not verify_figure_mobius(label)]
    return [Check(f"Mobius vectors of {len(labels)} classes", "[]", str(failed))]


def _inequalities() -> list[Check]:
    checks: list[Check] = []
    for cls, params, top, expected in INEQUALITY_EXAMPLES:
        instance = class_inequality_instance(cls, params, top)
        checks.append(Check(f"{cls} at {params}", str(expected), str(instance.value)))
    return checks


def _search(threads: int | None) -> list[Check]:
    hits = search_singular(SearchTemplate(bound=55), limit=1000, threads=threads)
    return [Check("s38 search finds Hong's set", "True", str(HONG_SET in hits))]


def _small_sets(count: int) -> list[Check]:
    singular: list[tuple[int, ...]] = []
    for seed in range(count):
        elements = random_gcd_closed(seed % 7 + 1, seed=seed)
        if not invertibility_report(ValuedSet.divisor(elements)).invertible:
            singular.append(elements)
    return [Check(f"{count} random gcd-closed sets with n <= 7 invertible", "[]", str(singular))]


def run_checks(full: bool = False, threads: int | None = None) -> list[Check]:
    """Every reproduced number; the n=7 enumeration only when ``full``."""
    groups: list[Callable[[], list[Check]]] = [
        _counterexamples,
        lambda: _counts(full, threads),
        _figures,
        _inequalities,
        lambda: _search(threads),
        lambda: _small_sets(1000 if full else 100),
    ]
    checks: list[Check] = []
    for group in groups:
        results = group()
        for check in results:
            if not check.passed:
                logger.warning(f"Check failed: {check.name}: {check.actual} != {check.expected}")
        checks.extend(results)
    return checks

"""Closed-form invertibility criteria for chains and x_1-sets."""

from dataclasses import dataclass
from enum import Enum

from ..lattice import ValuedSet
from .exceptions import ShapeError


class SpecialKind(str, Enum):
    CHAIN = "chain"
    X1_SET = "x1-set"
    BOUNDED_X1_SET = "bounded-x1-set"


@dataclass(frozen=True)
class SpecialCheckResult:
    holds: bool
    failing_index: int | None

    def __bool__(self) -> bool:
        return self.holds


def _is_x1_set(vs: ValuedSet) -> bool:
    if vs.n == 0:
        return False
    x1 = vs.elements[0]
    return all(
        vs.ambient.meet(vs.elements[i], vs.elements[j]) == x1
        for j in range(vs.n)
        for i in range(j)
    )


def _validate(vs: ValuedSet, kind: SpecialKind) -> None:
    if kind is SpecialKind.CHAIN:
        if not vs.induced.is_chain():
            raise ShapeError(kind.value, "elements are not totally ordered")
    elif kind is SpecialKind.X1_SET:
        if not _is_x1_set(vs):
            raise ShapeError(kind.value, "pairwise meets are not all x_1")
    else:
        if vs.n < 3:
            raise ShapeError(kind.value, "needs at least 3 elements")
        if not _is_x1_set(vs.prefix(vs.n - 1)):
            raise ShapeError(kind.value, "x_1..x_{n-1} is not an x_1-set")
        if vs.induced.top() != vs.n - 1:
            raise ShapeError(kind.value, "x_n is not above every element")


def special_condition_check(vs: ValuedSet, kind: SpecialKind | str) -> SpecialCheckResult:
    """Evaluate the closed-form criterion; failing index counts from 1."""
    kind = SpecialKind(kind)
    _validate(vs, kind)
    values = vs.values()

    if kind is SpecialKind.CHAIN:
        for k in range(1, vs.n):
            if values[k] == values[k - 1]:
                return SpecialCheckResult(False, k + 1)
        return SpecialCheckResult(True, None)

    last = vs.n if kind is SpecialKind.X1_SET else vs.n - 1
    for k in range(1, last):
        if values[k] == values[0]:
            return SpecialCheckResult(False, k + 1)
    if kind is SpecialKind.BOUNDED_X1_SET:
        n = vs.n
        bound = sum(1 / values[k] for k in range(1, n - 1)) - (n - 3) / values[0]
        if 1 / values[n - 1] == bound:
            return SpecialCheckResult(False, n)
    return SpecialCheckResult(True, None)

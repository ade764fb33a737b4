"""Instances of the class-membership inequalities for f = N.

Each function class G_{k,n} comes with a parametrized gcd-closed set
x_1 < ... < x_n and the last condition value

    c_n = sum of mu(x_k, x_n) / x_k

whose positivity for every admissible parameter choice puts N in the class.
"""

import logging
import random
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from ..constants import INEQUALITY_CLASSES, MAX_GENERATION_ATTEMPTS
from ..enumeration import bounded_x1_fixture, get_catalog
from ..lattice import divisor_subposet
from ..posets import Poset, is_isomorphic
from .counterexamples import is_gcd_closed
from .exceptions import ExhaustionError, ParamError

logger = logging.getLogger(__name__)

Params = Mapping[str, int]


@dataclass(frozen=True)
class InequalityInstance:
    """A concrete set x_1..x_n for one class and its last condition value."""

    cls: str
    params: tuple[tuple[str, int], ...]
    elements: tuple[int, ...]
    value: Fraction

    @property
    def positive(self) -> bool:
        return self.value > 0


@dataclass(frozen=True)
class _Layout:
    names: tuple[str, ...]
    target: str
    middle: Callable[[Params], tuple[int, ...]]
    mobius: tuple[int, ...]
    conditions: Callable[[Params], str | None]


def _at_least(params: Params, names: Iterable[str], low: int) -> str | None:
    for name in names:
        if params[name] < low:
            return f"{name} must be >= {low}, got {params[name]}"
    return None


def _coprime(params: Params, *pairs: str) -> str | None:
    for pair in pairs:
        u, v = pair
        if gcd(params[u], params[v]) != 1:
            return f"gcd({u}, {v}) must be 1"
    return None


def _g36_conditions(p: Params) -> str | None:
    return _at_least(p, "abcd", 2) or _coprime(p, "ab", "bc", "bd", "cd")


def _g37_conditions(p: Params) -> str | None:
    reason = _at_least(p, "abce", 2) or _at_least(p, "d", 1)
    if reason is None and gcd(p["c"], p["b"] * p["d"]) != 1:
        reason = "gcd(c, b*d) must be 1"
    return reason


def _g47_conditions(p: Params) -> str | None:
    return _at_least(p, "abcde", 2) or _coprime(p, "de")


_LAYOUTS: dict[str, _Layout] = {
    "g36": _Layout(
        ("a", "b", "c", "d"),
        "S_{3,6}",
        lambda p: (p["a"], p["b"], p["a"] * p["c"], p["a"] * p["d"]),
        (1, 1, -1, -1, -1, 1),
        _g36_conditions,
    ),
    "g37": _Layout(
        ("a", "b", "c", "d", "e"),
        "S_{3,7}",
        lambda p: (
            p["a"],
            p["b"],
            p["a"] * p["c"],
            p["a"] * p["b"] * p["d"],
            p["b"] * p["e"],
        ),
        (0, 1, 1, -1, -1, -1, 1),
        _g37_conditions,
    ),
    "g47a": _Layout(
        ("a", "b", "c", "d", "e"),
        "S_{4,7}^{(1)}",
        lambda p: (
            p["a"],
            p["b"],
            p["a"] * p["c"],
            p["a"] * p["d"],
            p["a"] * p["e"],
        ),
        (1, 2, -1, -1, -1, -1, 1),
        _g47_conditions,
    ),
    "g47b": _Layout(
        ("a", "b", "c", "d", "e"),
        "S_{4,7}^{(2)}",
        lambda p: (p["a"], p["b"], p["c"], p["a"] * p["d"], p["a"] * p["e"]),
        (2, 1, -1, -1, -1, -1, 1),
        _g47_conditions,
    ),
}


def _bounded_x1_layout(params: Params) -> _Layout:
    names = tuple(f"a{k}" for k in range(1, len(params) + 1))
    if set(params) != set(names) or len(names) < 2:
        raise ParamError(
            INEQUALITY_CLASSES["gn2n"], "expected parameters a1, a2, ..., am with m >= 2"
        )

    def conditions(p: Params) -> str | None:
        reason = _at_least(p, names, 2)
        for u, v in combinations(names, 2):
            if reason is None and gcd(p[u], p[v]) != 1:
                reason = f"gcd({u}, {v}) must be 1"
        return reason

    n = len(names) + 2
    return _Layout(
        names,
        f"S_{{{n - 2},{n}}}",
        lambda p: tuple(p[name] for name in names),
        (n - 3,) + (-1,) * (n - 2) + (1,),
        conditions,
    )


def _layout(cls: str, params: Params) -> _Layout:
    if cls == "gn2n":
        return _bounded_x1_layout(params)
    if cls not in _LAYOUTS:
        raise ParamError(cls, f"unknown class, expected one of {sorted(INEQUALITY_CLASSES)}")
    layout = _LAYOUTS[cls]
    if set(params) != set(layout.names):
        raise ParamError(
            INEQUALITY_CLASSES[cls], f"expected parameters {', '.join(layout.names)}"
        )
    return layout


def _target_poset(cls: str, layout: _Layout, n: int) -> Poset:
    if cls == "gn2n":
        return bounded_x1_fixture(n)
    return get_catalog()[layout.target].poset


def class_inequality_instance(
    cls: str,
    params: Params,
    top: int | None = None,
    x1: int = 1,
    *,
    strict: bool = False,
) -> InequalityInstance:
    """Build the set for ``cls`` and evaluate its last condition value.

    ``top`` defaults to the lcm of the middle elements and must be a
    multiple of it. With ``strict`` the set must also be gcd-closed of the
    class's shape.
    """
    layout = _layout(cls, params)
    name = INEQUALITY_CLASSES[cls]
    reason = layout.conditions(params)
    if reason is not None:
        raise ParamError(name, reason)
    if x1 < 1:
        raise ParamError(name, f"x1 must be a positive integer, got {x1}")

    middle = tuple(x1 * m for m in layout.middle(params))
    least = lcm(*middle)
    if top is None:
        top = least
    elif top < 1 or top % least:
        raise ParamError(name, f"top must be a positive multiple of {least}, got {top}")
    elements = (x1,) + middle + (top,)
    if len(set(elements)) != len(elements):
        raise ParamError(name, f"elements {elements} are not distinct")

    if strict:
        if not is_gcd_closed(elements):
            raise ParamError(name, f"{sorted(elements)} is not gcd-closed")
        target = _target_poset(cls, layout, len(elements))
        if not is_isomorphic(divisor_subposet(elements), target):
            raise ParamError(name, f"{sorted(elements)} is not of class {layout.target}")

    value = sum(
        (Fraction(mu, x) for mu, x in zip(layout.mobius, elements, strict=True)),
        Fraction(0),
    )
    return InequalityInstance(
        cls, tuple((k, params[k]) for k in layout.names), elements, value
    )


def random_inequality_parameters(
    cls: str, seed: int, bound: int = 30, n: int = 5
) -> dict[str, int]:
    """Reproducible parameters accepted by class_inequality_instance(strict=True).

    ``n`` is the set size for gn2n and is ignored otherwise.
    """
    rng = random.Random(f"{cls}:{seed}")
    if cls == "gn2n":
        names: tuple[str, ...] = tuple(f"a{k}" for k in range(1, n - 1))
    elif cls in _LAYOUTS:
        names = _LAYOUTS[cls].names
    else:
        raise ParamError(cls, f"unknown class, expected one of {sorted(INEQUALITY_CLASSES)}")

    for _ in range(MAX_GENERATION_ATTEMPTS):
        params = {name: rng.randint(2, bound) for name in names}
        if cls == "g37":
            params["d"] = rng.randint(1, bound)
        try:
            class_inequality_instance(cls, params, strict=True)
        except ParamError:
            continue
        return params
    raise ExhaustionError(len(names) + 2, bound)

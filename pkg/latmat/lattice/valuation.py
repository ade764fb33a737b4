"""Valuations f on ambient lattice elements.

Every evaluation is an exact nonzero rational; a zero value raises
ZeroValueError.
"""

import random
from abc import ABC, abstractmethod
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import factorint

from .exceptions import UndefinedValueError, ZeroValueError

Rational = Fraction | int


def parse_rational(value: Rational | str) -> Fraction:
    """Parse ``3``, ``"3"`` or ``"-2/7"`` into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(value.strip())


def format_rational(value: Fraction) -> str:
    return str(value)


class Valuation(ABC):
    """A function from ambient elements to nonzero rationals."""

    def __call__(self, x: int) -> Fraction:
        value = self.evaluate(x)
        if value == 0:
            raise ZeroValueError(self.describe(), x)
        return value

    @abstractmethod
    def evaluate(self, x: int) -> Fraction: ...

    @abstractmethod
    def describe(self) -> str:
        """Stable text form used in JSON output."""

    def reciprocal(self) -> "Valuation":
        return Reciprocal(self)


@dataclass(frozen=True)
class BuiltinN(Valuation):
    """N(m) = m."""

    def evaluate(self, x: int) -> Fraction:
        return Fraction(x)

    def describe(self) -> str:
        return "N"


@dataclass(frozen=True)
class Constant(Valuation):
    value: Fraction

    def evaluate(self, x: int) -> Fraction:
        return self.value

    def describe(self) -> str:
        return f"const({self.value})"


@dataclass(frozen=True)
class Power(Valuation):
    """N^k for an integer exponent k."""

    exponent: int

    def evaluate(self, x: int) -> Fraction:
        return Fraction(x) ** self.exponent

    def describe(self) -> str:
        return f"N^{self.exponent}"


@dataclass(frozen=True)
class Reciprocal(Valuation):
    inner: Valuation

    def evaluate(self, x: int) -> Fraction:
        return 1 / self.inner(x)

    def reciprocal(self) -> Valuation:
        return self.inner

    def describe(self) -> str:
        return f"1/{self.inner.describe()}"


@dataclass(frozen=True)
class Table(Valuation):
    """Explicit values per element."""

    entries: tuple[tuple[int, Fraction], ...]

    @cached_property
    def lookup(self) -> dict[int, Fraction]:
        return dict(self.entries)

    def evaluate(self, x: int) -> Fraction:
        try:
            return self.lookup[x]
        except KeyError:
            raise UndefinedValueError(self.describe(), x) from None

    def describe(self) -> str:
        body = ", ".join(f"{x}: {value}" for x, value in self.entries)
        return f"table({body})"


def _euler_phi_power(p: int, k: int) -> Fraction:
    return Fraction(p**k - p ** (k - 1))


def _sigma_power(p: int, k: int) -> Fraction:
    return Fraction(p ** (k + 1) - 1, p - 1)


def _tau_power(p: int, k: int) -> Fraction:
    return Fraction(k + 1)


PRIME_POWER_RULES: dict[str, Callable[[int, int], Fraction]] = {
    "euler_phi": _euler_phi_power,
    "sigma": _sigma_power,
    "tau": _tau_power,
}


@dataclass(frozen=True)
class Multiplicative(Valuation):
    """f(1) = 1 and f(p1^k1 ... pr^kr) = f(p1^k1) ... f(pr^kr).

    Prime-power values come from a named rule, an explicit table, or a
    seeded pseudo-random draw.
    """

    rule: str
    entries: tuple[tuple[tuple[int, int], Fraction], ...] = ()
    seed: int | None = None

    @cached_property
    def lookup(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.entries)

    def prime_power_value(self, p: int, k: int) -> Fraction:
        if self.rule in PRIME_POWER_RULES:
            return PRIME_POWER_RULES[self.rule](p, k)
        if self.rule == "seeded":
            rng = random.Random(f"{self.seed}:{p}:{k}")
            numerator = rng.choice([-9, -7, -5, -3, -2, -1, 1, 2, 3, 4, 5, 7, 9])
            return Fraction(numerator, rng.randint(1, 9))
        try:
            return self.lookup[(p, k)]
        except KeyError:
            raise UndefinedValueError(self.describe(), f"{p}^{k}") from None

    def evaluate(self, x: int) -> Fraction:
        value = Fraction(1)
        for p, k in factorint(x).items():
            value *= self.prime_power_value(int(p), int(k))
        return value

    def describe(self) -> str:
        if self.rule == "seeded":
            return f"multiplicative(seed={self.seed})"
        if self.rule == "table":
            body = ", ".join(f"{p}^{k}: {v}" for (p, k), v in self.entries)
            return f"multiplicative({body})"
        return self.rule


def N() -> Valuation:
    return BuiltinN()


def constant(value: Rational | str) -> Valuation:
    return Constant(parse_rational(value))


def power(exponent: int) -> Valuation:
    return Power(exponent)


def reciprocal(f: Valuation) -> Valuation:
    return f.reciprocal()


def table(mapping: Mapping[int, Rational | str]) -> Valuation:
    return Table(tuple((x, parse_rational(v)) for x, v in mapping.items()))


def multiplicative(mapping: Mapping[tuple[int, int], Rational | str]) -> Valuation:
    """Multiplicative valuation from explicit prime-power values."""
    return Multiplicative(
        "table", tuple(((p, k), parse_rational(v)) for (p, k), v in mapping.items())
    )


def euler_phi() -> Valuation:
    return Multiplicative("euler_phi")


def sigma() -> Valuation:
    return Multiplicative("sigma")


def tau() -> Valuation:
    return Multiplicative("tau")


def seeded_multiplicative(seed: int) -> Valuation:
    """A reproducible multiplicative valuation with random nonzero prime-power values."""
    return Multiplicative("seeded", seed=seed)


def parse_valuation(text: str) -> Valuation:
    """Parse the short names used on the command line and in JSON."""
    name = text.strip()
    builders: dict[str, Callable[[], Valuation]] = {
        "N": N,
        "euler_phi": euler_phi,
        "phi": euler_phi,
        "sigma": sigma,
        "tau": tau,
    }
    if name in builders:
        return builders[name]()
    if name.startswith("1/"):
        return reciprocal(parse_valuation(name[2:]))
    if name.startswith("N^"):
        return power(int(name[2:]))
    if name.startswith("const(") and name.endswith(")"):
        return constant(name[len("const(") : -1])
    if name.startswith("multiplicative(seed=") and name.endswith(")"):
        return seeded_multiplicative(int(name[len("multiplicative(seed=") : -1]))
    raise ValueError(f"Unknown valuation: {text}")

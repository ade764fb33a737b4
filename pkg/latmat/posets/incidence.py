"""Incidence algebra of a finite poset over the rationals."""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..constants import ERROR_MESSAGES
from .exceptions import InvalidPosetError, MismatchError, NoBottomError
from .poset import Poset, iter_bits

Rational = Fraction | int


@dataclass(frozen=True)
class IncidenceFunction:
    """A rational function on the pairs ``x_i <= x_j`` of a poset.

    ``values[i][j]`` is zero whenever ``x_i`` is not below ``x_j``.
    """

    poset: Poset
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = self.poset.n
        if len(self.values) != n or any(len(row) != n for row in self.values):
            raise InvalidPosetError(
                ERROR_MESSAGES["not_partial_order"].format(
                    reason=f"incidence table is not {n} x {n}"
                )
            )
        for i, row in enumerate(self.values):
            for j, value in enumerate(row):
                if value and not self.poset.down[j] >> i & 1:
                    raise InvalidPosetError(
                        ERROR_MESSAGES["support"].format(value=value, i=i, j=j)
                    )

    def __call__(self, i: int, j: int) -> Fraction:
        return self.values[i][j]

    def __add__(self, other: "IncidenceFunction") -> "IncidenceFunction":
        return add(self, other)

    def __mul__(self, other: "IncidenceFunction") -> "IncidenceFunction":
        return convolve(self, other)

    @classmethod
    def from_function(
        cls, poset: Poset, fn: Callable[[int, int], Rational]
    ) -> "IncidenceFunction":
        """Tabulate ``fn`` on the order relation, zero elsewhere."""
        n = poset.n
        rows = [[Fraction(0)] * n for _ in range(n)]
        for j, mask in enumerate(poset.down):
            for i in iter_bits(mask):
                rows[i][j] = Fraction(fn(i, j))
        return cls(poset, tuple(tuple(row) for row in rows))

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.values[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.values)


def zeta(poset: Poset) -> IncidenceFunction:
    return IncidenceFunction.from_function(poset, lambda i, j: 1)


def delta(poset: Poset) -> IncidenceFunction:
    return IncidenceFunction.from_function(poset, lambda i, j: 1 if i == j else 0)


def mobius(poset: Poset) -> IncidenceFunction:
    """Mobius function by the forward recursion.

    mu(i, i) = 1 and mu(i, j) = -sum(mu(i, k) for i <= k < j).
    """
    n = poset.n
    mu = [[0] * n for _ in range(n)]
    for i in range(n):
        mu[i][i] = 1
        for j in iter_bits(poset.up[i] & ~(1 << i)):
            interval = poset.up[i] & poset.down[j] & ~(1 << j)
            mu[i][j] = -sum(mu[i][k] for k in iter_bits(interval))
    return _from_ints(poset, mu)


def mobius_backward(poset: Poset) -> IncidenceFunction:
    """Mobius function by the backward recursion.

    mu(i, j) = -sum(mu(k, j) for i < k <= j).
    """
    n = poset.n
    mu = [[0] * n for _ in range(n)]
    for j in range(n):
        mu[j][j] = 1
        below = list(iter_bits(poset.down[j] & ~(1 << j)))
        for i in reversed(below):
            interval = poset.up[i] & poset.down[j] & ~(1 << i)
            mu[i][j] = -sum(mu[k][j] for k in iter_bits(interval))
    return _from_ints(poset, mu)


def convolve(g: IncidenceFunction, h: IncidenceFunction) -> IncidenceFunction:
    """(g * h)(x, y) = sum of g(x, z) h(z, y) over x <= z <= y."""
    if g.poset != h.poset:
        raise MismatchError()
    poset = g.poset
    n = poset.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in iter_bits(poset.up[i]):
            interval = poset.up[i] & poset.down[j]
            rows[i][j] = sum(
                (g.values[i][k] * h.values[k][j] for k in iter_bits(interval)),
                Fraction(0),
            )
    return IncidenceFunction(poset, tuple(tuple(row) for row in rows))


def add(g: IncidenceFunction, h: IncidenceFunction) -> IncidenceFunction:
    """Pointwise sum."""
    if g.poset != h.poset:
        raise MismatchError()
    return IncidenceFunction(
        g.poset,
        tuple(
            tuple(a + b for a, b in zip(row_g, row_h, strict=True))
            for row_g, row_h in zip(g.values, h.values, strict=True)
        ),
    )


def from_point_values(
    poset: Poset, values: Sequence[Rational]
) -> IncidenceFunction:
    """Embed a function on elements as g(0, z) = values[z], zero off the bottom row."""
    bottom = poset.bottom()
    if bottom is None:
        raise NoBottomError()
    if len(values) != poset.n:
        raise ValueError(f"Expected {poset.n} values, got {len(values)}")
    return IncidenceFunction.from_function(
        poset, lambda i, j: values[j] if i == bottom else 0
    )


def _from_ints(poset: Poset, table: list[list[int]]) -> IncidenceFunction:
    return IncidenceFunction(
        poset, tuple(tuple(Fraction(v) for v in row) for row in table)
    )

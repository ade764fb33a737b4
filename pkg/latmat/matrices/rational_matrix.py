"""Dense exact-rational matrices with fraction-free elimination."""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..constants import COFACTOR_MAX_SIZE
from .exceptions import ShapeError, SingularError

Rational = Fraction | int


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable rows x cols matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise ShapeError(f"entries are not {self.rows} x {self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Rational | str]]) -> "RationalMatrix":
        table = tuple(tuple(Fraction(value) for value in row) for row in rows)
        widths = {len(row) for row in table}
        if len(widths) > 1:
            raise ShapeError(f"ragged rows of lengths {sorted(widths)}")
        cols = widths.pop() if widths else 0
        return cls(len(table), cols, table)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence[Rational]) -> "RationalMatrix":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return matmul(self, other)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols,
            self.rows,
            tuple(
                tuple(self.entries[i][j] for i in range(self.rows))
                for j in range(self.cols)
            ),
        )

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def to_strings(self) -> list[list[str]]:
        return [[str(value) for value in row] for row in self.entries]


def matmul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    columns = b.transpose().entries
    return RationalMatrix(
        a.rows,
        b.cols,
        tuple(
            tuple(
                sum((x * y for x, y in zip(row, column, strict=True)), Fraction(0))
                for column in columns
            )
            for row in a.entries
        ),
    )


def _require_square(m: RationalMatrix) -> None:
    if not m.is_square:
        raise ShapeError(f"expected a square matrix, got {m.rows}x{m.cols}")


def _integer_columns(m: RationalMatrix) -> tuple[list[list[int]], list[int]]:
    """Scale each column by the lcm of its denominators.

    Returns the integer matrix and the per-column scale factors.
    """
    scales = [
        math.lcm(*(m.entries[i][j].denominator for i in range(m.rows)))
        for j in range(m.cols)
    ]
    table = [
        [int(m.entries[i][j] * scales[j]) for j in range(m.cols)] for i in range(m.rows)
    ]
    return table, scales


def bareiss_determinant(table: list[list[int]]) -> int:
    """Determinant of an integer matrix by Bareiss elimination."""
    a = [row[:] for row in table]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(m: RationalMatrix) -> Fraction:
    """Exact determinant: clear column denominators, then Bareiss."""
    _require_square(m)
    table, scales = _integer_columns(m)
    return Fraction(bareiss_determinant(table), math.prod(scales))


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse by fraction-free Gauss-Jordan elimination.

    With A = B diag(1/L) for integer B, the inverse is diag(L) B^-1.
    """
    _require_square(m)
    n = m.rows
    table, scales = _integer_columns(m)
    a = [row + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(table)]

    previous = 1
    for k in range(n):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                raise SingularError()
            a[k], a[pivot] = a[pivot], a[k]
        for i in range(n):
            if i == k:
                continue
            a[i] = [
                (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // previous
                for j in range(2 * n)
            ]
        previous = a[k][k]

    return RationalMatrix.from_rows(
        [
            [Fraction(a[i][n + j] * scales[i], a[i][i]) for j in range(n)]
            for i in range(n)
        ]
    )


def cofactor_determinant(m: RationalMatrix) -> Fraction:
    """Determinant by Laplace expansion along the first row (small n only)."""
    _require_square(m)
    if m.rows > COFACTOR_MAX_SIZE:
        raise ShapeError(
            f"cofactor expansion is limited to {COFACTOR_MAX_SIZE} x {COFACTOR_MAX_SIZE}"
        )

    def expand(rows: tuple[tuple[Fraction, ...], ...]) -> Fraction:
        if not rows:
            return Fraction(1)
        total = Fraction(0)
        for j, value in enumerate(rows[0]):
            if value:
                minor = tuple(row[:j] + row[j + 1 :] for row in rows[1:])
                total += (-1) ** j * value * expand(minor)
        return total

    return expand(m.entries)

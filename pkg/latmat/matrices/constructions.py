"""Meet and join matrices, the join factorization, and prefix determinants."""

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import divisors, totient

from ..lattice import (
    DivisorLattice,
    NotSemimultiplicativeError,
    Valuation,
    ValuedSet,
    is_semimultiplicative,
)
from ..posets import iter_bits, mobius
from .exceptions import FactorizationError, NotFactorClosedError
from .rational_matrix import RationalMatrix, matmul


def meet_matrix(vs: ValuedSet, valuation: Valuation | None = None) -> RationalMatrix:
    """(S)_f with entries f(x_i meet x_j)."""
    f = valuation if valuation is not None else vs.f
    return RationalMatrix.from_rows(
        [[f(vs.meet(i, j)) for j in range(vs.n)] for i in range(vs.n)]
    )


def join_matrix(vs: ValuedSet, valuation: Valuation | None = None) -> RationalMatrix:
    """[S]_f with entries f(x_i join x_j)."""
    f = valuation if valuation is not None else vs.f
    return RationalMatrix.from_rows(
        [[f(vs.join(i, j)) for j in range(vs.n)] for i in range(vs.n)]
    )


@dataclass(frozen=True)
class JoinFactorization:
    """[S]_f = delta (S)_{1/f} delta with delta = diag(f(x_1), ..., f(x_n))."""

    delta: tuple[Fraction, ...]
    core: RationalMatrix

    def delta_matrix(self) -> RationalMatrix:
        return RationalMatrix.diagonal(self.delta)

    def reconstruct(self) -> RationalMatrix:
        d = self.delta_matrix()
        return matmul(matmul(d, self.core), d)


def factorize_join(vs: ValuedSet) -> JoinFactorization:
    """Factor the join matrix through the meet matrix of 1/f.

    Raises NotSemimultiplicativeError when f fails on a pair of S.
    """
    result = is_semimultiplicative(vs.ambient, vs.f, vs.elements)
    if result.witness is not None:
        raise NotSemimultiplicativeError(result.witness)

    factorization = JoinFactorization(
        vs.values(), meet_matrix(vs, vs.f.reciprocal())
    )
    expected = join_matrix(vs)
    rebuilt = factorization.reconstruct()
    for i in range(vs.n):
        for j in range(vs.n):
            if rebuilt[i, j] != expected[i, j]:
                raise FactorizationError(i, j)
    return factorization


@dataclass(frozen=True)
class ConvolutionDeterminant:
    """Prefix convolution values c_k = (g * mu_S)(x_k) and their product."""

    values: tuple[Fraction, ...]
    determinant: Fraction


def det_meet_via_convolution(vs: ValuedSet, g: Valuation) -> ConvolutionDeterminant:
    """det (S)_g as the product of (g * mu_S)(x_k) for a meet-closed S.

    c_k sums g(x_j) mu_S(x_j, x_k) over x_j <= x_k in the induced order.
    """
    vs.require_meet_closed()
    mu = mobius(vs.induced)
    weights = [g(x) for x in vs.elements]
    values = tuple(
        sum(
            (weights[j] * mu(j, k) for j in iter_bits(vs.induced.down[k])),
            Fraction(0),
        )
        for k in range(vs.n)
    )
    return ConvolutionDeterminant(values, math.prod(values, start=Fraction(1)))


def smith_determinant(ints: list[int]) -> Fraction:
    """det of the GCD matrix of a factor-closed set: the product of phi(x)."""
    vs = ValuedSet.create(DivisorLattice(), ints)
    present = set(vs.elements)
    for x in vs.elements:
        for d in divisors(x):
            if int(d) not in present:
                raise NotFactorClosedError(int(d), x)
    return Fraction(math.prod(int(totient(x)) for x in vs.elements))

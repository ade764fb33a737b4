"""Tests for ambient lattices, valuations and valued sets."""

import itertools
import math
import random
from fractions import Fraction

import pytest

from latmat.enumeration import enumerate_meet_semilattices
from latmat.lattice import (
    AbstractLattice,
    DivisorLattice,
    DuplicateError,
    LatticeTableError,
    NonPositiveError,
    NotInAmbientError,
    NotMeetClosedError,
    UndefinedValueError,
    ValuedSet,
    ZeroValueError,
    N,
    constant,
    divisor_subposet,
    euler_phi,
    is_a_set,
    is_join_closed,
    is_lower_closed,
    is_meet_closed,
    is_semimultiplicative,
    join_closure,
    meet_closure,
    multiplicative,
    parse_valuation,
    power,
    reciprocal,
    seeded_multiplicative,
    sigma,
    table,
    tau,
)
from latmat.posets import chain


class TestDivisorLattice:
    """Test gcd/lcm as meet/join."""

    def test_meet_and_join(self):
        """Test that meet is gcd and join is lcm."""
        lattice = DivisorLattice()
        assert lattice.meet(12, 18) == 6
        assert lattice.join(12, 18) == 36
        assert lattice.leq(3, 12)
        assert not lattice.leq(12, 3)

    def test_rejects_non_positive(self):
        """Test that zero and negatives are not elements."""
        lattice = DivisorLattice()
        with pytest.raises(NonPositiveError):
            lattice.check_element(0)
        assert not lattice.contains(-4)

    def test_rejects_duplicates(self):
        """Test that repeated elements raise DuplicateError."""
        with pytest.raises(DuplicateError):
            DivisorLattice().check_distinct([1, 2, 2])

    def test_divisor_subposet(self):
        """Test the divisibility order on a small set."""
        p = divisor_subposet([6, 1, 2, 3])
        assert p.labels == ("1", "2", "3", "6")
        assert p.lower_covers(3) == {1, 2}


class TestAbstractLattice:
    """Test lattices given by tables."""

    def test_from_poset(self, diamond):
        """Test tabulating the diamond."""
        lattice = AbstractLattice.from_poset(diamond)
        assert lattice.meet(1, 2) == 0
        assert lattice.join(1, 2) == 3
        assert lattice.n == 4

    def test_from_poset_needs_lattice(self, vee):
        """Test that a poset without joins is rejected."""
        with pytest.raises(LatticeTableError):
            AbstractLattice.from_poset(vee)

    def test_adjoined_top(self, vee):
        """Test that adjoining a top makes the vee a lattice."""
        lattice = AbstractLattice.from_meet_semilattice(vee)
        assert lattice.n == 4
        assert lattice.join(1, 2) == 3

    def test_existing_top_kept(self, diamond):
        """Test that a semilattice with a top is tabulated as it is."""
        lattice = AbstractLattice.from_meet_semilattice(diamond)
        assert lattice.n == 4
        assert lattice.poset == diamond
        assert lattice.join(1, 2) == 3

    def test_wrong_meet_table(self, diamond):
        """Test that a meet table that is not the glb is rejected."""
        lattice = AbstractLattice.from_poset(diamond)
        meet = [list(row) for row in lattice.meet_table]
        meet[1][2] = meet[2][1] = 1
        with pytest.raises(LatticeTableError):
            AbstractLattice(
                diamond, tuple(tuple(row) for row in meet), lattice.join_table
            )

    def test_table_shape(self, diamond):
        """Test that non-square tables are rejected."""
        with pytest.raises(LatticeTableError):
            AbstractLattice(diamond, ((0,),), ((0,),))

    def test_element_range(self, diamond):
        """Test that indices outside the lattice are not elements."""
        lattice = AbstractLattice.from_poset(diamond)
        with pytest.raises(NotInAmbientError):
            lattice.check_element(4)


class TestValuations:
    """Test the built-in valuations."""

    def test_arithmetic_functions(self):
        """Test values of the classical arithmetic functions."""
        assert N()(6) == 6
        assert power(2)(3) == 9
        assert euler_phi()(12) == 4
        assert sigma()(12) == 28
        assert tau()(12) == 6
        assert euler_phi()(1) == 1

    def test_reciprocal_and_constant(self):
        """Test reciprocals and rational constants."""
        assert reciprocal(N())(4) == Fraction(1, 4)
        assert reciprocal(reciprocal(N()))(4) == 4
        assert constant("1/2")(7) == Fraction(1, 2)

    def test_zero_rejected(self):
        """Test that a zero value raises ZeroValueError."""
        with pytest.raises(ZeroValueError):
            constant(0)(1)

    def test_table_lookup(self):
        """Test that tables only know their own elements."""
        f = table({1: 2, 2: "3/4"})
        assert f(2) == Fraction(3, 4)
        with pytest.raises(UndefinedValueError):
            f(3)

    def test_multiplicative_table(self):
        """Test prime-power tables extended multiplicatively."""
        f = multiplicative({(2, 1): 3, (3, 1): 5})
        assert f(6) == 15
        assert f(1) == 1
        with pytest.raises(UndefinedValueError):
            f(4)

    def test_seeded_multiplicative(self):
        """Test that seeded valuations are reproducible and multiplicative."""
        f = seeded_multiplicative(3)
        assert f(6) == f(2) * f(3)
        assert seeded_multiplicative(3)(10) == f(10)

    @pytest.mark.parametrize(
        ("text", "x", "expected"),
        [
            ("N", 5, Fraction(5)),
            ("phi", 9, Fraction(6)),
            ("1/N^2", 2, Fraction(1, 4)),
            ("const(3)", 8, Fraction(3)),
            ("1/sigma", 2, Fraction(1, 3)),
        ],
    )
    def test_parse_valuation(self, text, x, expected):
        """Test the short valuation names."""
        assert parse_valuation(text)(x) == expected

    def test_parse_unknown(self):
        """Test that unknown names raise ValueError."""
        with pytest.raises(ValueError):
            parse_valuation("bogus")


class TestClosures:
    """Test meet/join closures and set predicates."""

    def test_closures(self):
        """Test the gcd and lcm closures of {4, 6}."""
        lattice = DivisorLattice()
        assert meet_closure(lattice, [4, 6]) == (2, 4, 6)
        assert join_closure(lattice, [4, 6]) == (4, 6, 12)
        assert is_meet_closed(lattice, [2, 4, 6])
        assert not is_join_closed(lattice, [2, 4, 6])

    @pytest.mark.parametrize("seed", range(30))
    def test_meet_closure_is_minimal(self, seed):
        """Test that the gcd closure is exactly the gcds of nonempty subsets."""
        rng = random.Random(seed)
        ints = rng.sample(range(1, 200), rng.randint(1, 5))
        expected = {
            math.gcd(*subset)
            for size in range(1, len(ints) + 1)
            for subset in itertools.combinations(ints, size)
        }
        closure = meet_closure(DivisorLattice(), ints)
        assert set(closure) == expected
        assert is_meet_closed(DivisorLattice(), closure)

    def test_meet_closure_abstract(self, diamond):
        """Test the closure inside a finite lattice."""
        lattice = AbstractLattice.from_poset(diamond)
        assert meet_closure(lattice, [1, 2]) == (0, 1, 2)
        assert meet_closure(lattice, [1, 3]) == (1, 3)

    def test_lower_closed(self):
        """Test factor-closedness."""
        lattice = DivisorLattice()
        assert is_lower_closed(lattice, [1, 2, 4])
        assert not is_lower_closed(lattice, [1, 4])

    def test_a_set(self):
        """Test sets whose pairwise meets are all equal."""
        lattice = DivisorLattice()
        assert is_a_set(lattice, [2, 3, 5], 1)
        assert not is_a_set(lattice, [2, 4, 5], 1)


class TestValuedSet:
    """Test valued element sets."""

    def test_ordering(self):
        """Test that elements come out in a linear extension."""
        vs = ValuedSet.divisor([6, 1, 2, 3])
        assert vs.elements == (1, 2, 3, 6)
        assert vs.index_of(3) == 2
        assert vs.meet(1, 2) == 1
        assert vs.labels() == ("1", "2", "3", "6")

    def test_index_of_missing(self):
        """Test that a missing element raises IndexError."""
        with pytest.raises(IndexError):
            ValuedSet.divisor([1, 2]).index_of(5)

    def test_not_meet_closed(self):
        """Test that {2, 3} lacks its gcd."""
        vs = ValuedSet.divisor([2, 3])
        assert not vs.is_meet_closed()
        with pytest.raises(NotMeetClosedError) as excinfo:
            vs.require_meet_closed()
        assert excinfo.value.witness == (2, 3)
        assert excinfo.value.meet == 1

    def test_prefix(self):
        """Test that S_i keeps the first i elements."""
        vs = ValuedSet.divisor([1, 2, 3, 6])
        assert vs.prefix(2).elements == (1, 2)
        assert vs.prefix(2).induced.down == chain(2).down

    def test_valuation_checked_at_joins(self):
        """Test that f must be defined at pairwise joins."""
        with pytest.raises(UndefinedValueError):
            ValuedSet.divisor([2, 3], table({2: 1, 3: 1}))

    def test_unchecked_creation(self):
        """Test that validation can be skipped."""
        vs = ValuedSet.create(
            DivisorLattice(), [2, 3], table({2: 1, 3: 1}), validate=False
        )
        assert vs.values() == (1, 1)

    def test_abstract_elements(self, diamond):
        """Test a valued set inside an abstract lattice."""
        lattice = AbstractLattice.from_poset(diamond)
        vs = ValuedSet.create(lattice, [3, 0, 1], table({0: 1, 1: 2, 2: 3, 3: 6}))
        assert vs.elements == (0, 1, 3)
        assert vs.is_meet_closed()


class TestSemimultiplicative:
    """Test f(x)f(y) = f(x meet y)f(x join y)."""

    def test_n_on_pairs(self):
        """Test that N holds on the pairs of a set."""
        result = is_semimultiplicative(DivisorLattice(), N(), [1, 2, 3, 6, 10])
        assert result
        assert result.scope == "pairs of S"
        assert result.tested == 10

    def test_multiplicative_sampled(self):
        """Test that a multiplicative function passes on random pairs."""
        result = is_semimultiplicative(DivisorLattice(), euler_phi(), sample=200)
        assert result.holds
        assert result.scope == "sampled"

    def test_failure_witness(self):
        """Test that a failing pair is reported."""
        f = table({1: 1, 2: 2, 3: 3, 6: 5})
        result = is_semimultiplicative(DivisorLattice(), f, [1, 2, 3, 6])
        assert not result
        assert result.witness == (2, 3)

    def test_abstract_exhaustive(self, diamond):
        """Test an exhaustive check on a finite lattice."""
        lattice = AbstractLattice.from_poset(diamond)
        result = is_semimultiplicative(lattice, table({0: 1, 1: 2, 2: 3, 3: 6}))
        assert result.holds
        assert result.scope == "exhaustive"

    @pytest.mark.parametrize(
        "f", [N(), sigma(), euler_phi(), seeded_multiplicative(4), constant(3)]
    )
    def test_reciprocal_on_divisor_sets(self, f):
        """Test that 1/f of a multiplicative f is still semimultiplicative."""
        elements = [1, 2, 3, 4, 6, 10, 12, 35]
        assert is_semimultiplicative(DivisorLattice(), f, elements)
        assert is_semimultiplicative(DivisorLattice(), f.reciprocal(), elements)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_reciprocal_on_semilattices(self, n):
        """Test that f and 1/f pass or fail together, with the same witness."""
        rng = random.Random(n)
        pool = [Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 2)]
        for poset in enumerate_meet_semilattices(n):
            lattice = AbstractLattice.from_meet_semilattice(poset)
            valuations = [constant(2)] + [
                table({i: rng.choice(pool) for i in range(lattice.n)}) for _ in range(5)
            ]
            for f in valuations:
                direct = is_semimultiplicative(lattice, f)
                inverted = is_semimultiplicative(lattice, f.reciprocal())
                assert direct.holds == inverted.holds
                assert direct.witness == inverted.witness

    def test_divisor_needs_scope(self):
        """Test that the infinite lattice needs elements or a sample."""
        with pytest.raises(ValueError):
            is_semimultiplicative(DivisorLattice(), N())

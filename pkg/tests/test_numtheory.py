"""Tests for counterexamples, searches, inequality instances and random sets."""

from fractions import Fraction

import pytest

from latmat.invertibility import condition_values, max_cover_degree
from latmat.lattice import ValuedSet, divisor_subposet
from latmat.numtheory import (
    HONG_SET,
    NINE_ELEMENT_SET,
    ExhaustionError,
    ParamError,
    SearchTemplate,
    class_inequality_instance,
    gcd_closure,
    is_gcd_closed,
    pad_with_chain,
    random_gcd_closed,
    random_inequality_parameters,
    search_singular,
    verify_counterexample,
)

INEQUALITY_CLASSES = ["g36", "g37", "g47a", "g47b", "gn2n"]


class TestCounterexamples:
    """Test the diagnosis of LCM matrices on integer sets."""

    def test_hong_set(self):
        """Test that the eight-element set is singular at its top."""
        diagnosis = verify_counterexample(HONG_SET)
        assert diagnosis.gcd_closed
        assert diagnosis.singular
        assert diagnosis.det == 0
        assert diagnosis.det_via_conditions == 0
        assert diagnosis.label == "S_{3,8}"
        assert diagnosis.report is not None
        assert diagnosis.report.first_failure == 8

    def test_nine_element_set(self):
        """Test that the nine-element set is gcd-closed and singular."""
        assert is_gcd_closed(NINE_ELEMENT_SET)
        diagnosis = verify_counterexample(NINE_ELEMENT_SET)
        assert diagnosis.singular
        assert diagnosis.label is None
        assert diagnosis.report is not None
        assert diagnosis.report.first_failure is not None

    def test_small_invertible_set(self):
        """Test that {1, 2, 3} has LCM determinant 12."""
        diagnosis = verify_counterexample([1, 2, 3])
        assert diagnosis.det == 12
        assert diagnosis.det_via_conditions == 12
        assert not diagnosis.singular

    def test_not_gcd_closed(self):
        """Test that only the elimination route runs without gcd-closure."""
        diagnosis = verify_counterexample([2, 3])
        assert not diagnosis.gcd_closed
        assert diagnosis.det == -30
        assert diagnosis.report is None
        assert diagnosis.det_via_conditions is None

    def test_gcd_closure(self):
        """Test closing a set under gcd."""
        assert gcd_closure([4, 6]) == (2, 4, 6)
        assert not is_gcd_closed([4, 6])

    def test_pad_with_chain(self):
        """Test that padding keeps a singular set singular."""
        padded = pad_with_chain(HONG_SET, 2)
        assert len(padded) == 10
        assert padded[-1] == 227700 * 4
        assert is_gcd_closed(padded)
        assert verify_counterexample(padded).singular

    def test_pad_rejects_negative(self):
        """Test that a negative padding is rejected."""
        with pytest.raises(ValueError):
            pad_with_chain(HONG_SET, -1)

    def test_pad_needs_top(self):
        """Test that padding needs a common multiple on top."""
        with pytest.raises(ValueError):
            pad_with_chain([1, 2, 3], 1)

    @pytest.mark.parametrize("seed", range(40))
    def test_small_random_sets_invertible(self, seed):
        """Test that gcd-closed sets with at most seven elements are invertible."""
        elements = random_gcd_closed(seed % 7 + 1, seed=seed)
        assert not verify_counterexample(elements).singular

    @pytest.mark.slow
    def test_thousand_random_sets_invertible(self):
        """Test 1000 random gcd-closed sets with at most seven elements."""
        for seed in range(1000):
            elements = random_gcd_closed(seed % 7 + 1, seed=seed)
            assert not verify_counterexample(elements).singular, elements


class TestSearch:
    """Test the structured search for singular sets."""

    def test_finds_hong_set(self):
        """Test that the search reaches the known counterexample."""
        hits = search_singular(SearchTemplate(bound=55), limit=1000)
        assert HONG_SET in hits
        assert hits[0] == (1, 2, 3, 5, 70, 75, 174, 30450)
        for found in hits:
            assert verify_counterexample(found).singular

    def test_small_bound(self):
        """Test that tiny multipliers give no hits."""
        assert search_singular(SearchTemplate(bound=3), limit=10) == []

    def test_limit(self):
        """Test that the limit caps the hits."""
        assert search_singular(SearchTemplate(bound=55), limit=1) == [
            (1, 2, 3, 5, 70, 75, 174, 30450)
        ]
        assert search_singular(SearchTemplate(bound=55), limit=0) == []

    def test_padding(self):
        """Test that padded hits stay singular."""
        (found,) = search_singular(SearchTemplate(bound=55, pad=1), limit=1)
        assert len(found) == 9
        assert verify_counterexample(found).singular

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"name": "s99"},
            {"atoms": (2, 4, 5)},
            {"atoms": (1, 3, 5)},
            {"bound": 0},
            {"pad": -1},
        ],
    )
    def test_invalid_template(self, kwargs):
        """Test template validation."""
        with pytest.raises(ValueError):
            SearchTemplate(**kwargs)


class TestInequalities:
    """Test class-membership inequality instances for N."""

    def test_g36_example(self):
        """Test the six-element example with top 60."""
        instance = class_inequality_instance("g36", {"a": 2, "b": 3, "c": 2, "d": 5}, 60)
        assert instance.elements == (1, 2, 3, 4, 10, 60)
        assert instance.value == Fraction(50, 60)
        assert instance.positive

    def test_g36_strict(self):
        """Test that the six-element example has the right shape."""
        instance = class_inequality_instance(
            "g36", {"a": 2, "b": 3, "c": 2, "d": 5}, 60, strict=True
        )
        assert instance.value == Fraction(5, 6)

    def test_g47a_example(self):
        """Test the first seven-element example under the stated conditions."""
        params = {"a": 2, "b": 3, "c": 3, "d": 2, "e": 5}
        assert class_inequality_instance("g47a", params, 60).value == Fraction(70, 60)

    def test_g47a_example_not_strict(self):
        """Test that strict mode notices 3 divides 6 in that example."""
        params = {"a": 2, "b": 3, "c": 3, "d": 2, "e": 5}
        with pytest.raises(ParamError):
            class_inequality_instance("g47a", params, 60, strict=True)

    def test_g47b_example(self):
        """Test the second seven-element example with top 420."""
        params = {"a": 2, "b": 3, "c": 7, "d": 5, "e": 2}
        assert class_inequality_instance("g47b", params, 420).value == Fraction(704, 420)

    def test_bounded_x1(self):
        """Test the parametric class on three coprime atoms."""
        instance = class_inequality_instance("gn2n", {"a1": 2, "a2": 3, "a3": 5})
        assert instance.elements == (1, 2, 3, 5, 30)
        assert instance.value == 1

    def test_x1_scaling(self):
        """Test that x_1 scales every element."""
        params = {"a": 2, "b": 3, "c": 2, "d": 5}
        instance = class_inequality_instance("g36", params, x1=7)
        assert instance.elements == (7, 14, 21, 28, 70, 420)
        assert instance.value == Fraction(5, 6) / 7

    @pytest.mark.parametrize(
        ("cls", "params", "top", "x1"),
        [
            ("g36", {"a": 1, "b": 3, "c": 2, "d": 5}, None, 1),
            ("g36", {"a": 3, "b": 2, "c": 4, "d": 5}, None, 1),
            ("g36", {"a": 2, "b": 3, "c": 2, "d": 5}, 50, 1),
            ("g36", {"a": 2, "b": 3, "c": 2, "d": 5}, None, 0),
            ("g36", {"a": 2}, None, 1),
            ("g99", {"a": 2}, None, 1),
            ("gn2n", {"a1": 2}, None, 1),
            ("g47a", {"a": 2, "b": 3, "c": 2, "d": 4, "e": 6}, None, 1),
        ],
    )
    def test_invalid_parameters(self, cls, params, top, x1):
        """Test that violated side conditions raise ParamError."""
        with pytest.raises(ParamError):
            class_inequality_instance(cls, params, top, x1)

    @pytest.mark.parametrize("cls", INEQUALITY_CLASSES)
    @pytest.mark.parametrize("seed", range(10))
    def test_random_instances_positive(self, cls, seed):
        """Test positivity and agreement with the last condition value."""
        params = random_inequality_parameters(cls, seed)
        instance = class_inequality_instance(cls, params, strict=True)
        assert instance.positive
        assert instance.value == condition_values(ValuedSet.divisor(instance.elements))[-1]

    @pytest.mark.slow
    @pytest.mark.parametrize("cls", INEQUALITY_CLASSES)
    def test_hundred_random_instances(self, cls):
        """Test 100 random admissible instances per class."""
        for seed in range(100):
            params = random_inequality_parameters(cls, seed)
            assert class_inequality_instance(cls, params, strict=True).positive

    def test_random_parameters_reproducible(self):
        """Test that a seed fixes the parameters."""
        assert random_inequality_parameters("g37", 4) == random_inequality_parameters("g37", 4)

    def test_random_parameters_unknown_class(self):
        """Test that an unknown class raises ParamError."""
        with pytest.raises(ParamError):
            random_inequality_parameters("g99", 0)


class TestRandomGcdClosed:
    """Test seeded random gcd-closed sets."""

    @pytest.mark.parametrize("n", [1, 4, 8])
    def test_shape(self, n):
        """Test size, bounds and gcd-closure."""
        elements = random_gcd_closed(n, value_bound=1000, seed=n)
        assert len(elements) == n
        assert len(set(elements)) == n
        assert all(1 <= x <= 1000 for x in elements)
        assert is_gcd_closed(elements)

    def test_reproducible(self):
        """Test that the seed fixes the set."""
        assert random_gcd_closed(6, seed=11) == random_gcd_closed(6, seed=11)

    def test_default_seed_from_settings(self, settings_env):
        """Test that LATMAT_SEED is the default seed."""
        settings_env(seed=5)
        assert random_gcd_closed(5) == random_gcd_closed(5, seed=5)

    def test_reaches_three_cover_shapes(self):
        """Test that antichain draws produce elements covering three others."""
        degrees = [
            max_cover_degree(divisor_subposet(random_gcd_closed(8, seed=seed)))
            for seed in range(200)
        ]
        assert sum(degree >= 3 for degree in degrees) >= 3

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_only_antichain_draws(self, n):
        """Test that small sizes still finish when every draw is an antichain."""
        elements = random_gcd_closed(n, value_bound=1000, seed=3, antichain_weight=1)
        assert len(elements) == n
        assert is_gcd_closed(elements)

    def test_antichain_weight_range(self):
        """Test that the weight is a probability."""
        with pytest.raises(ValueError):
            random_gcd_closed(4, antichain_weight=1.5)

    def test_bound_too_small(self):
        """Test that n distinct values need a large enough bound."""
        with pytest.raises(ExhaustionError):
            random_gcd_closed(5, value_bound=3)

    def test_non_positive_size(self):
        """Test that n must be positive."""
        with pytest.raises(ValueError):
            random_gcd_closed(0)

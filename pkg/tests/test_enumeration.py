"""Tests for meet-semilattice enumeration and the catalog."""

import pytest

from latmat.enumeration import (
    BOUNDED_X1_LABELS,
    UnknownLabelError,
    antichains,
    bounded_x1_fixture,
    catalog_completeness,
    classify,
    enumerate_by_filter,
    enumerate_meet_semilattices,
    filter_min_cover,
    get_catalog,
    mobius_to_last,
    required_function_classes,
    sufficient_classes,
    verify_figure_mobius,
)
from latmat.lattice import divisor_subposet
from latmat.numtheory import HONG_SET, pad_with_chain
from latmat.posets import SizeError, antichain, canonical_form, canonicalize, chain

SEMILATTICE_COUNTS = {1: 1, 2: 1, 3: 2, 4: 5, 5: 15, 6: 53}


class TestAntichains:
    """Test antichain masks."""

    def test_antichain_of_two(self):
        """Test every nonempty subset of an antichain."""
        assert list(antichains(antichain(2))) == [1, 2, 3]

    def test_chain(self):
        """Test that a chain only has singletons."""
        assert list(antichains(chain(3))) == [1, 2, 4]


class TestEnumeration:
    """Test the canonical augmentation generator."""

    @pytest.mark.parametrize(("n", "expected"), sorted(SEMILATTICE_COUNTS.items()))
    def test_counts(self, n, expected):
        """Test the number of meet semilattices up to isomorphism."""
        assert len(enumerate_meet_semilattices(n)) == expected

    @pytest.mark.slow
    def test_count_seven(self):
        """Test the 222 meet semilattices with seven elements."""
        assert len(enumerate_meet_semilattices(7)) == 222

    def test_representatives_are_canonical(self):
        """Test that each result is a canonical meet semilattice."""
        level = enumerate_meet_semilattices(5)
        keys = [canonicalize(p) for p in level]
        assert keys == sorted(keys)
        for poset in level:
            assert poset.is_meet_semilattice()
            assert canonical_form(poset) == poset

    @pytest.mark.parametrize("n", range(1, 6))
    def test_filter_route_agrees(self, n):
        """Test the brute-force route against the generator."""
        fast = [canonicalize(p) for p in enumerate_meet_semilattices(n)]
        slow = [canonicalize(p) for p in enumerate_by_filter(n)]
        assert fast == slow

    def test_min_cover(self):
        """Test the counts of semilattices with a three-cover element."""
        assert len(filter_min_cover(enumerate_meet_semilattices(5), 3)) == 1
        assert len(filter_min_cover(enumerate_meet_semilattices(6), 3)) == 7

    @pytest.mark.slow
    def test_min_cover_seven(self):
        """Test the 47 seven-element semilattices with a three-cover element."""
        assert len(filter_min_cover(enumerate_meet_semilattices(7), 3)) == 47

    def test_parallel_matches_serial(self):
        """Test that worker processes give the same level."""
        assert enumerate_meet_semilattices(5, threads=2) == enumerate_meet_semilattices(5)

    @pytest.mark.parametrize("n", [0, 9])
    def test_size_limits(self, n):
        """Test the size guard of the generator."""
        with pytest.raises(SizeError):
            enumerate_meet_semilattices(n)

    def test_size_limit_from_settings(self, settings_env):
        """Test that LATMAT_ENUMERATION_MAX_SIZE lowers the ceiling."""
        settings_env(enumeration_max_size=4)
        with pytest.raises(SizeError):
            enumerate_meet_semilattices(5)

    def test_filter_route_limit(self):
        """Test the size guard of the brute-force route."""
        with pytest.raises(SizeError):
            enumerate_by_filter(8)


class TestCatalog:
    """Test the shipped catalog of named classes."""

    def test_loaded(self):
        """Test that the catalog holds every fixture."""
        catalog = get_catalog()
        assert len(catalog) == 79
        assert catalog.max_size == 8

    def test_aliases(self):
        """Test alias resolution."""
        catalog = get_catalog()
        assert catalog.resolve("S_{3,6}") == "6_F"
        assert "S_{3,6}" in catalog
        assert catalog["S_{5,7}"].label == "7_I"

    def test_unknown_label(self):
        """Test that an unknown label raises UnknownLabelError."""
        with pytest.raises(UnknownLabelError):
            get_catalog()["9_Z"]

    def test_groupings(self):
        """Test that every entry is found by its figure and family."""
        catalog = get_catalog()
        for entry in catalog:
            assert entry in catalog.by_figure(entry.figure)
            assert entry in catalog.by_family(entry.family)

    def test_hong_class(self):
        """Test that the eight-element counterexample has its own class."""
        assert classify(divisor_subposet(HONG_SET)) == "S_{3,8}"

    def test_five_element_labels(self):
        """Test that the fifteen five-element classes are exactly 5_A to 5_O."""
        labels = [classify(poset) for poset in enumerate_meet_semilattices(5)]
        assert sorted(labels) == [f"5_{letter}" for letter in "ABCDEFGHIJKLMNO"]

    def test_classify_too_large(self):
        """Test that posets larger than every fixture are unlabeled."""
        assert classify(divisor_subposet(pad_with_chain(HONG_SET, 1))) is None

    def test_diamond(self, diamond):
        """Test the label and function classes of the diamond."""
        assert classify(diamond) == "4_E"
        assert sufficient_classes(diamond) == ("F_2",)

    def test_mobius_vectors(self):
        """Test every stored Mobius vector."""
        for label in get_catalog().labels():
            assert verify_figure_mobius(label)

    def test_bottom_values(self):
        """Test a few values of mu(x_1, x_n)."""
        catalog = get_catalog()
        assert catalog["7_I"].mobius_top[0] == 4
        assert catalog["S_{3,8}"].mobius_top == (-1, 1, 1, 1, -1, -1, -1, 1)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_bounded_x1_class(self, n):
        """Test the parametric class S_{n-2,n}."""
        assert verify_figure_mobius(BOUNDED_X1_LABELS[0], n)
        assert mobius_to_last(bounded_x1_fixture(n))[0] == n - 3

    def test_bounded_x1_fixture_size(self):
        """Test that the fixture needs three elements."""
        with pytest.raises(ValueError):
            bounded_x1_fixture(2)

    def test_required_classes(self):
        """Test the function classes attached to labels."""
        assert required_function_classes("5_O") == ("F_1", "G_{3,5}")
        assert required_function_classes("S_{n-2,n}") == ("G_{n-2,n}",)

    def test_uncatalogued_fallback(self):
        """Test the cover-count fallback for sizes beyond the catalog."""
        assert sufficient_classes(chain(9)) == ("F_1",)
        assert sufficient_classes(divisor_subposet(pad_with_chain(HONG_SET, 1))) is None

    @pytest.mark.parametrize("n", [5, 6])
    def test_completeness(self, n):
        """Test that every semilattice with a three-cover element is labeled."""
        assert catalog_completeness(n)

    @pytest.mark.slow
    def test_completeness_seven(self):
        """Test catalog completeness at seven elements."""
        assert catalog_completeness(7)

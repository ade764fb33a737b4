"""Tests for JSON documents and DOT output."""

import json

import pytest
from pydantic import ValidationError

from latmat.invertibility import invertibility_report
from latmat.io import (
    DiagnosisModel,
    FormatError,
    MatrixModel,
    PosetModel,
    ReportModel,
    ValuedSetModel,
    dump_model,
    load_poset,
    load_valued_set,
    parse_elements,
    parse_params,
    poset_to_dot,
    write_dot,
)
from latmat.lattice import DivisorLattice, ValuedSet, is_semimultiplicative
from latmat.matrices import RationalMatrix
from latmat.numtheory import HONG_SET, verify_counterexample
from latmat.posets import InvalidPosetError


class TestPosetModel:
    """Test poset documents."""

    def test_round_trip(self, diamond):
        """Test that a poset survives a document."""
        assert PosetModel.from_poset(diamond).to_poset() == diamond

    def test_indexed_poset_keeps_indices(self):
        """Test that explicit indexing must be a linear extension."""
        model = PosetModel(n=2, covers=[(1, 0)])
        assert model.to_poset().is_chain()
        with pytest.raises(InvalidPosetError):
            model.to_indexed_poset()

    def test_negative_size(self):
        """Test that n must be non-negative."""
        with pytest.raises(ValidationError):
            PosetModel(n=-1)

    def test_load_from_file(self, write_json):
        """Test reading a poset file."""
        path = write_json("p.json", {"n": 3, "covers": [[0, 1], [1, 2]]})
        assert load_poset(path).is_chain()


class TestValuedSetModel:
    """Test valued set documents."""

    def test_divisor_named_valuation(self, write_json):
        """Test a divisor set with a named valuation."""
        path = write_json("s.json", {"elements": ["1", "2", "4"], "f": "phi"})
        vs = load_valued_set(path)
        assert vs.elements == (1, 2, 4)
        assert vs.values() == (1, 1, 2)

    def test_divisor_value_list(self):
        """Test values aligned with the listed elements."""
        model = ValuedSetModel(elements=["6", "1"], f=["5", "1/2"])
        vs = model.to_valued_set()
        assert vs.elements == (1, 6)
        assert vs.values()[1] == 5

    def test_value_list_length(self):
        """Test that values must match the elements."""
        with pytest.raises(FormatError):
            ValuedSetModel(elements=["1", "2"], f=["1"]).to_valued_set()

    def test_divisor_needs_elements(self):
        """Test that a divisor set needs elements."""
        with pytest.raises(FormatError):
            ValuedSetModel().to_valued_set()

    def test_abstract_lattice(self, diamond):
        """Test a set in a lattice given by its poset."""
        model = ValuedSetModel(
            ambient="abstract",
            poset=PosetModel.from_poset(diamond),
            f=["1", "2", "3", "6"],
        )
        vs = model.to_valued_set()
        assert vs.n == 4
        assert is_semimultiplicative(vs.ambient, vs.f)

    def test_abstract_needs_poset(self):
        """Test that an abstract set needs a poset."""
        with pytest.raises(FormatError):
            ValuedSetModel(ambient="abstract", elements=["0"]).to_valued_set()

    def test_unknown_ambient(self):
        """Test that unknown ambients fail validation."""
        with pytest.raises(ValidationError):
            ValuedSetModel(ambient="integers")

    def test_bad_integer(self):
        """Test that non-integer elements raise FormatError."""
        with pytest.raises(FormatError):
            ValuedSetModel(elements=["1", "two"]).to_valued_set()

    def test_round_trip(self):
        """Test building a document from elements."""
        model = ValuedSetModel.from_elements([1, 2, 3], f="N")
        assert model.to_valued_set().elements == (1, 2, 3)


class TestLoadModel:
    """Test file handling."""

    def test_bad_json(self, tmp_path):
        """Test that malformed JSON raises FormatError."""
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(FormatError):
            load_poset(path)

    def test_missing_file(self, tmp_path):
        """Test that a missing file raises FormatError."""
        with pytest.raises(FormatError):
            load_poset(tmp_path / "missing.json")

    def test_schema_violation(self, write_json):
        """Test that a wrong shape raises FormatError."""
        with pytest.raises(FormatError):
            load_poset(write_json("p.json", {"covers": "x"}))


class TestModels:
    """Test output documents."""

    def test_matrix_round_trip(self):
        """Test that rational entries travel as strings."""
        m = RationalMatrix.from_rows([["1/2", 3], [0, "-4/3"]])
        model = MatrixModel.from_matrix(m)
        assert model.entries == [["1/2", "3"], ["0", "-4/3"]]
        assert model.to_matrix() == m

    def test_matrix_bad_entry(self):
        """Test that unparsable entries raise FormatError."""
        with pytest.raises(FormatError):
            MatrixModel(rows=1, cols=1, entries=[["x"]]).to_matrix()

    def test_report_steps(self):
        """Test condition values in a report document."""
        report = invertibility_report(ValuedSet.divisor([1, 2, 4]))
        model = ReportModel.from_report(report, DivisorLattice())
        assert [step.c for step in model.steps] == ["1", "-1/2", "-1/4"]
        assert model.steps[2].element == "4"
        assert model.verdict == "invertible"

    def test_diagnosis_document(self):
        """Test the class alias and exact values in a diagnosis."""
        model = DiagnosisModel.from_diagnosis(verify_counterexample(HONG_SET))
        data = json.loads(dump_model(model))
        assert data["class"] == "S_{3,8}"
        assert data["det"] == "0"
        assert data["singular"] is True
        assert data["first_failure"] == 8
        assert data["elements"][-1] == "227700"


class TestParsing:
    """Test command-line argument parsing."""

    def test_elements(self):
        """Test comma-separated integers with spaces."""
        assert parse_elements("1, 2,3") == [1, 2, 3]

    @pytest.mark.parametrize("text", ["", "1,x", ","])
    def test_bad_elements(self, text):
        """Test that malformed lists raise FormatError."""
        with pytest.raises(FormatError):
            parse_elements(text)

    def test_params(self):
        """Test key=value pairs."""
        assert parse_params("a=2, b=3") == {"a": 2, "b": 3}

    @pytest.mark.parametrize("text", ["a2", "=3", "a=x"])
    def test_bad_params(self, text):
        """Test that malformed pairs raise FormatError."""
        with pytest.raises(FormatError):
            parse_params(text)


class TestDot:
    """Test Hasse diagram rendering."""

    def test_diamond(self, diamond):
        """Test ranks and edges of the diamond."""
        text = poset_to_dot(diamond)
        assert text.startswith("digraph hasse {")
        assert "rankdir=BT;" in text
        assert "{ rank=same; n1; n2; }" in text
        assert "n0 -> n1;" in text
        assert "n2 -> n3;" in text

    def test_labels_escaped(self, vee):
        """Test that quotes in labels are escaped."""
        text = poset_to_dot(vee, labels=["a", 'b"c', "d"])
        assert 'label="b\\"c"' in text

    def test_label_count(self, vee):
        """Test that labels must match the elements."""
        with pytest.raises(ValueError):
            poset_to_dot(vee, labels=["a"])

    def test_write(self, diamond, tmp_path):
        """Test writing a DOT file."""
        path = tmp_path / "d.dot"
        write_dot(diamond, path)
        assert path.read_text(encoding="utf-8") == poset_to_dot(diamond)

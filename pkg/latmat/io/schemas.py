"""JSON documents exchanged by the command line.

Integers of the divisor lattice and every rational cross the boundary as
strings, so no precision is lost.
"""

import json
import logging
from pathlib import Path
from typing import Any, TypeVar

from pydantic import BaseModel, Field, ValidationError, validator

from ..invertibility import InvertibilityReport
from ..lattice import (
    AbstractLattice,
    AmbientLattice,
    DivisorLattice,
    ValuedSet,
    Valuation,
    format_rational,
    parse_valuation,
    table,
)
from ..lattice.ambient import KIND_ABSTRACT, KIND_DIVISOR
from ..matrices import JoinFactorization, RationalMatrix
from ..numtheory import CounterexampleDiagnosis, InequalityInstance
from ..posets import Poset, build_poset, transitive_closure
from .exceptions import FormatError

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)


class PosetModel(BaseModel):
    """A poset by its cover relations on 0-based indices."""

    n: int
    covers: list[tuple[int, int]] = []
    labels: list[str] | None = None

    @validator("n")
    @classmethod
    def validate_n(cls, v: int) -> int:
        if v < 0:
            raise ValueError("n must be non-negative")
        return v

    def to_poset(self) -> Poset:
        """Build the poset, re-indexing to a linear extension if needed."""
        return build_poset(self.n, self.covers, self.labels)

    def to_indexed_poset(self) -> Poset:
        """Build the poset keeping the given indices, which must be a linear extension."""
        labels = tuple(self.labels) if self.labels is not None else None
        return Poset(self.n, tuple(transitive_closure(self.n, self.covers)), labels)

    @classmethod
    def from_poset(cls, poset: Poset) -> "PosetModel":
        return cls(
            n=poset.n,
            covers=list(poset.covers),
            labels=list(poset.labels) if poset.labels is not None else None,
        )


class ValuedSetModel(BaseModel):
    """A valued set in the divisor lattice or in a lattice given by tables.

    ``f`` is a valuation name such as ``"N"`` or a list of values: aligned
    with ``elements`` for the divisor lattice, indexed by element for an
    abstract lattice.
    """

    ambient: str = KIND_DIVISOR
    elements: list[str] | None = None
    f: str | list[str] = "N"
    poset: PosetModel | None = None
    meet: list[list[int]] | None = None
    join: list[list[int]] | None = None

    @validator("ambient")
    @classmethod
    def validate_ambient(cls, v: str) -> str:
        if v not in (KIND_DIVISOR, KIND_ABSTRACT):
            raise ValueError(f"ambient must be {KIND_DIVISOR!r} or {KIND_ABSTRACT!r}")
        return v

    def _valuation(self, points: list[int]) -> Valuation:
        if isinstance(self.f, str):
            return parse_valuation(self.f)
        if len(self.f) != len(points):
            raise FormatError("valuation", f"{len(self.f)} values for {len(points)} elements")
        return table(dict(zip(points, self.f, strict=True)))

    def to_valued_set(self) -> ValuedSet:
        if self.ambient == KIND_DIVISOR:
            if not self.elements:
                raise FormatError("valued set", "a divisor set needs elements")
            ints = [_parse_int(x) for x in self.elements]
            return ValuedSet.create(DivisorLattice(), ints, self._valuation(ints))

        if self.poset is None:
            raise FormatError("valued set", "an abstract lattice needs a poset")
        poset = self.poset.to_indexed_poset()
        if self.meet is None or self.join is None:
            lattice = AbstractLattice.from_poset(poset)
        else:
            lattice = AbstractLattice(
                poset,
                tuple(tuple(row) for row in self.meet),
                tuple(tuple(row) for row in self.join),
            )
        elements = (
            [_parse_int(x) for x in self.elements]
            if self.elements is not None
            else list(lattice.elements())
        )
        return ValuedSet.create(lattice, elements, self._valuation(list(lattice.elements())))

    @classmethod
    def from_elements(cls, elements: list[int], f: str = "N") -> "ValuedSetModel":
        return cls(elements=[str(x) for x in elements], f=f)


class MatrixModel(BaseModel):
    rows: int
    cols: int
    entries: list[list[str]]

    def to_matrix(self) -> RationalMatrix:
        try:
            return RationalMatrix.from_rows(self.entries)
        except (ValueError, ZeroDivisionError) as e:
            raise FormatError("matrix", str(e)) from e

    @classmethod
    def from_matrix(cls, matrix: RationalMatrix) -> "MatrixModel":
        return cls(
            rows=matrix.rows,
            cols=matrix.cols,
            entries=[list(row) for row in matrix.to_strings()],
        )


class StepModel(BaseModel):
    i: int
    element: str
    m: int
    covered: list[int]
    c: str
    passed: bool


class ReportModel(BaseModel):
    """Verdict of the inductive method with every step's condition value."""

    verdict: str
    first_failure: int | None
    scope: str
    det_core: str
    steps: list[StepModel]

    @classmethod
    def from_report(
        cls, report: InvertibilityReport, ambient: AmbientLattice
    ) -> "ReportModel":
        return cls(
            verdict=report.verdict,
            first_failure=report.first_failure,
            scope=report.scope,
            det_core=format_rational(report.det_core),
            steps=[
                StepModel(
                    i=step.i,
                    element=ambient.format_element(step.element),
                    m=step.m,
                    covered=list(step.covered),
                    c=format_rational(step.condition_value),
                    passed=step.passed,
                )
                for step in report.steps
            ],
        )


class DiagnosisModel(BaseModel):
    elements: list[str]
    gcd_closed: bool
    label: str | None = Field(None, alias="class")
    det: str
    det_via_conditions: str | None
    singular: bool
    first_failure: int | None
    report: ReportModel | None

    class Config:
        allow_population_by_field_name = True

    @classmethod
    def from_diagnosis(cls, diagnosis: CounterexampleDiagnosis) -> "DiagnosisModel":
        report = None
        if diagnosis.report is not None:
            report = ReportModel.from_report(diagnosis.report, DivisorLattice())
        return cls(
            elements=[str(x) for x in diagnosis.elements],
            gcd_closed=diagnosis.gcd_closed,
            label=diagnosis.label,
            det=format_rational(diagnosis.det),
            det_via_conditions=(
                format_rational(diagnosis.det_via_conditions)
                if diagnosis.det_via_conditions is not None
                else None
            ),
            singular=diagnosis.singular,
            first_failure=report.first_failure if report is not None else None,
            report=report,
        )


class FactorizationModel(BaseModel):
    delta: list[str]
    core: MatrixModel

    @classmethod
    def from_factorization(cls, factorization: JoinFactorization) -> "FactorizationModel":
        return cls(
            delta=[format_rational(v) for v in factorization.delta],
            core=MatrixModel.from_matrix(factorization.core),
        )


class PosetSummaryModel(BaseModel):
    poset: PosetModel
    meet_semilattice: bool
    lattice: bool
    bottom: int | None
    top: int | None
    heights: list[int]

    @classmethod
    def from_poset(cls, poset: Poset) -> "PosetSummaryModel":
        return cls(
            poset=PosetModel.from_poset(poset),
            meet_semilattice=poset.is_meet_semilattice(),
            lattice=poset.is_lattice(),
            bottom=poset.bottom(),
            top=poset.top(),
            heights=list(poset.heights),
        )


class ClassificationModel(BaseModel):
    """Catalog label of a meet semilattice and its sufficient function classes."""

    key: str
    label: str | None
    figure: int | None = None
    family: str | None = None
    requires: list[str] | None
    largest_cover: int


class EnumeratedClass(BaseModel):
    key: str
    label: str | None
    poset: PosetModel


class EnumerationModel(BaseModel):
    n: int
    min_cover: int | None
    count: int
    classes: list[EnumeratedClass] = []


class InequalityModel(BaseModel):
    key: str
    name: str
    params: dict[str, int]
    elements: list[str]
    value: str
    positive: bool

    @classmethod
    def from_instance(cls, instance: InequalityInstance, name: str) -> "InequalityModel":
        return cls(
            key=instance.cls,
            name=name,
            params=dict(instance.params),
            elements=[str(x) for x in instance.elements],
            value=format_rational(instance.value),
            positive=instance.positive,
        )


class SearchModel(BaseModel):
    template: str
    target: str
    bound: int
    limit: int
    hits: list[list[str]]


def _parse_int(value: str) -> int:
    try:
        return int(value)
    except ValueError as e:
        raise FormatError("integer", value) from e


def parse_elements(text: str) -> list[int]:
    """Parse a comma-separated list such as ``1,2,3,5``."""
    parts = [part.strip() for part in text.split(",") if part.strip()]
    if not parts:
        raise FormatError("element list", text)
    return [_parse_int(part) for part in parts]


def parse_params(text: str) -> dict[str, int]:
    """Parse ``a=2,b=3`` into a mapping."""
    params: dict[str, int] = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep or not key.strip():
            raise FormatError("parameter", part)
        params[key.strip()] = _parse_int(value.strip())
    return params


def load_model(path: Path, model: type[ModelT]) -> ModelT:
    """Read and validate a JSON document."""
    try:
        data: Any = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise FormatError(f"JSON file {path}", str(e)) from e
    try:
        return model.parse_obj(data)
    except ValidationError as e:
        raise FormatError(model.__name__, str(e)) from e


def load_poset(path: Path) -> Poset:
    return load_model(path, PosetModel).to_poset()


def load_valued_set(path: Path) -> ValuedSet:
    return load_model(path, ValuedSetModel).to_valued_set()


def dump_model(model: BaseModel) -> str:
    return model.json(by_alias=True, indent=2)


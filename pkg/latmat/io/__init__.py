"""JSON schemas and Hasse diagram rendering."""

from .dot import poset_to_dot, write_dot
from .exceptions import FormatError
from .schemas import (
    ClassificationModel,
    DiagnosisModel,
    EnumeratedClass,
    EnumerationModel,
    FactorizationModel,
    InequalityModel,
    MatrixModel,
    PosetModel,
    PosetSummaryModel,
    ReportModel,
    SearchModel,
    StepModel,
    ValuedSetModel,
    dump_model,
    load_model,
    load_poset,
    load_valued_set,
    parse_elements,
    parse_params,
)

__all__ = [
    "FormatError",
    "poset_to_dot",
    "write_dot",
    "ClassificationModel",
    "DiagnosisModel",
    "EnumeratedClass",
    "EnumerationModel",
    "FactorizationModel",
    "InequalityModel",
    "MatrixModel",
    "PosetModel",
    "PosetSummaryModel",
    "ReportModel",
    "SearchModel",
    "StepModel",
    "ValuedSetModel",
    "dump_model",
    "load_model",
    "load_poset",
    "load_valued_set",
    "parse_elements",
    "parse_params",
]

"""The inductive invertibility method for meet and join matrices."""

from .construction import (
    ConstructionSequence,
    ConstructionStep,
    InvertibilityReport,
    MethodProfile,
    condition_c1,
    condition_c2_join_form,
    condition_c2_meet_form,
    condition_values,
    construction_sequence,
    invertibility_report,
    max_cover_degree,
    method_profile,
    prefix_determinants,
)
from .exceptions import InvertibilityError, ShapeError, ZeroDenominatorError
from .special import SpecialCheckResult, SpecialKind, special_condition_check

__all__ = [
    "ConstructionSequence",
    "ConstructionStep",
    "InvertibilityReport",
    "MethodProfile",
    "construction_sequence",
    "condition_values",
    "invertibility_report",
    "max_cover_degree",
    "method_profile",
    "prefix_determinants",
    "condition_c1",
    "condition_c2_meet_form",
    "condition_c2_join_form",
    "SpecialKind",
    "SpecialCheckResult",
    "special_condition_check",
    "InvertibilityError",
    "ShapeError",
    "ZeroDenominatorError",
]

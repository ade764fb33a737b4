"""Divisor-lattice tooling: counterexamples, searches and inequality instances."""

from .counterexamples import (
    HONG_SET,
    NINE_ELEMENT_SET,
    CounterexampleDiagnosis,
    gcd_closure,
    is_gcd_closed,
    pad_with_chain,
    verify_counterexample,
)
from .exceptions import ExhaustionError, NumtheoryError, ParamError, RouteMismatchError
from .inequalities import (
    InequalityInstance,
    class_inequality_instance,
    random_inequality_parameters,
)
from .random_sets import random_gcd_closed
from .search import TEMPLATES, SearchTemplate, search_shard, search_singular

__all__ = [
    "HONG_SET",
    "NINE_ELEMENT_SET",
    "TEMPLATES",
    "CounterexampleDiagnosis",
    "ExhaustionError",
    "InequalityInstance",
    "NumtheoryError",
    "ParamError",
    "RouteMismatchError",
    "SearchTemplate",
    "class_inequality_instance",
    "gcd_closure",
    "is_gcd_closed",
    "pad_with_chain",
    "random_gcd_closed",
    "random_inequality_parameters",
    "search_shard",
    "search_singular",
    "verify_counterexample",
]

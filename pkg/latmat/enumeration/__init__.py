"""Enumeration of meet semilattices and the catalog of named classes."""

from .catalog import (
    BOUNDED_X1_LABELS,
    CatalogEntry,
    SemilatticeCatalog,
    bounded_x1_fixture,
    catalog_completeness,
    classify,
    get_catalog,
    mobius_to_last,
    required_function_classes,
    sufficient_classes,
    unclassified,
    verify_figure_mobius,
)
from .exceptions import CatalogError, EnumerationError, UnknownLabelError
from .generator import (
    antichains,
    enumerate_by_filter,
    enumerate_meet_semilattices,
    extensions,
    filter_min_cover,
)

__all__ = [
    "enumerate_meet_semilattices",
    "enumerate_by_filter",
    "filter_min_cover",
    "antichains",
    "extensions",
    "BOUNDED_X1_LABELS",
    "CatalogEntry",
    "SemilatticeCatalog",
    "get_catalog",
    "classify",
    "verify_figure_mobius",
    "mobius_to_last",
    "bounded_x1_fixture",
    "required_function_classes",
    "sufficient_classes",
    "unclassified",
    "catalog_completeness",
    "EnumerationError",
    "UnknownLabelError",
    "CatalogError",
]

"""Finite posets, their incidence algebra and canonical forms."""

from .canonical import (
    CanonicalKey,
    canonical_form,
    canonical_form_with_key,
    canonical_labeling,
    canonicalize,
    is_isomorphic,
)
from .exceptions import (
    CycleError,
    InvalidPosetError,
    MismatchError,
    NoBottomError,
    PosetError,
    SizeError,
)
from .incidence import (
    IncidenceFunction,
    add,
    convolve,
    delta,
    from_point_values,
    mobius,
    mobius_backward,
    zeta,
)
from .poset import (
    Poset,
    antichain,
    build_poset,
    chain,
    iter_bits,
    linear_extension,
    transitive_closure,
)

__all__ = [
    "Poset",
    "build_poset",
    "chain",
    "antichain",
    "iter_bits",
    "linear_extension",
    "transitive_closure",
    "IncidenceFunction",
    "zeta",
    "delta",
    "mobius",
    "mobius_backward",
    "convolve",
    "add",
    "from_point_values",
    "CanonicalKey",
    "canonicalize",
    "canonical_form",
    "canonical_form_with_key",
    "canonical_labeling",
    "is_isomorphic",
    "PosetError",
    "CycleError",
    "InvalidPosetError",
    "SizeError",
    "MismatchError",
    "NoBottomError",
]

"""Ambient lattices, valuations and valued element sets."""

from .ambient import AbstractLattice, AmbientLattice, DivisorLattice
from .exceptions import (
    DuplicateError,
    LatticeError,
    LatticeTableError,
    NonPositiveError,
    NotInAmbientError,
    NotMeetClosedError,
    NotSemimultiplicativeError,
    UndefinedValueError,
    ZeroValueError,
)
from .valuation import (
    BuiltinN,
    Constant,
    Multiplicative,
    N,
    Power,
    Reciprocal,
    Table,
    Valuation,
    constant,
    euler_phi,
    format_rational,
    multiplicative,
    parse_rational,
    parse_valuation,
    power,
    reciprocal,
    seeded_multiplicative,
    sigma,
    table,
    tau,
)
from .valued_set import (
    SemimultiplicativityResult,
    ValuedSet,
    divisor_subposet,
    is_a_set,
    is_join_closed,
    is_lower_closed,
    is_meet_closed,
    is_semimultiplicative,
    join_closure,
    meet_closure,
)

__all__ = [
    "AmbientLattice",
    "AbstractLattice",
    "DivisorLattice",
    "Valuation",
    "BuiltinN",
    "Constant",
    "Power",
    "Reciprocal",
    "Table",
    "Multiplicative",
    "N",
    "constant",
    "power",
    "reciprocal",
    "table",
    "multiplicative",
    "euler_phi",
    "sigma",
    "tau",
    "seeded_multiplicative",
    "parse_rational",
    "format_rational",
    "parse_valuation",
    "ValuedSet",
    "SemimultiplicativityResult",
    "divisor_subposet",
    "meet_closure",
    "join_closure",
    "is_meet_closed",
    "is_join_closed",
    "is_lower_closed",
    "is_a_set",
    "is_semimultiplicative",
    "LatticeError",
    "DuplicateError",
    "NonPositiveError",
    "NotInAmbientError",
    "ZeroValueError",
    "UndefinedValueError",
    "NotSemimultiplicativeError",
    "NotMeetClosedError",
    "LatticeTableError",
]

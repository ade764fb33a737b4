"""Exact meet and join matrices."""

from .constructions import (
    ConvolutionDeterminant,
    JoinFactorization,
    det_meet_via_convolution,
    factorize_join,
    join_matrix,
    meet_matrix,
    smith_determinant,
)
from .exceptions import (
    FactorizationError,
    MatrixError,
    NotFactorClosedError,
    ShapeError,
    SingularError,
)
from .rational_matrix import (
    RationalMatrix,
    bareiss_determinant,
    cofactor_determinant,
    determinant,
    inverse,
    matmul,
)

__all__ = [
    "RationalMatrix",
    "matmul",
    "determinant",
    "bareiss_determinant",
    "inverse",
    "cofactor_determinant",
    "meet_matrix",
    "join_matrix",
    "JoinFactorization",
    "factorize_join",
    "ConvolutionDeterminant",
    "det_meet_via_convolution",
    "smith_determinant",
    "MatrixError",
    "ShapeError",
    "SingularError",
    "FactorizationError",
    "NotFactorClosedError",
]

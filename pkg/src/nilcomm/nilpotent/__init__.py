"""Case algebras A, B, C: hypercomplex arithmetic, brackets, skew forms, stabilizers."""
from .cases import (
    CaseAlgebra,
    CenterElement,
    Generator,
    b_lambda_matrix,
    bracket,
    case_algebra,
    left_multiplication,
    lie_algebra_generators,
    square_integrable,
    stabilizer_dimension,
)
from .hypercomplex import (
    Octonion,
    Quaternion,
    octonion_mul,
    octonion_table,
    parse_quaternion,
    quaternion_mul,
    quaternion_table,
)
from .linalg import SkewForm, determinant, pfaffian, rank

__all__ = [
    "CaseAlgebra",
    "CenterElement",
    "Generator",
    "Octonion",
    "Quaternion",
    "SkewForm",
    "b_lambda_matrix",
    "bracket",
    "case_algebra",
    "determinant",
    "left_multiplication",
    "lie_algebra_generators",
    "octonion_mul",
    "octonion_table",
    "parse_quaternion",
    "pfaffian",
    "quaternion_mul",
    "quaternion_table",
    "rank",
    "square_integrable",
    "stabilizer_dimension",
]

"""Exact representation-theoretic checks for commutative vector bundles over nilmanifolds."""

__version__ = "0.1.0"

from .classifier import TripleSpec, branch_so7_to_so6, classify_triple  # noqa: E402
from .metaplectic import multiplicity_free_scan  # noqa: E402
from .nilpotent import case_algebra, pfaffian, square_integrable, stabilizer_dimension  # noqa: E402
from .tensor import okada_row_tensor, tensor_klimyk, verify_row2_selfcontainment  # noqa: E402
from .weights import AlgebraType, Decomposition, HighestWeight, weyl_dimension  # noqa: E402

__all__ = [
    "AlgebraType",
    "Decomposition",
    "HighestWeight",
    "TripleSpec",
    "branch_so7_to_so6",
    "case_algebra",
    "classify_triple",
    "multiplicity_free_scan",
    "okada_row_tensor",
    "pfaffian",
    "square_integrable",
    "stabilizer_dimension",
    "tensor_klimyk",
    "verify_row2_selfcontainment",
    "weyl_dimension",
]

from .descriptor import Descriptor, DescriptorError, label_sign
from .forms import Form, adjoint, build_form
from .matrix_gradings import cartan_matrix_grading, inner_grading, pauli, pauli_matrices
from .octonions import derivation_algebra, derivation_grading, is_abelian, normalizer, octonions
from .outer import NotFine, outer_grading_sl, skew_algebra, skew_grading
from .qtensor import QTensor, qtensor

__all__ = [
    "Descriptor",
    "DescriptorError",
    "label_sign",
    "Form",
    "adjoint",
    "build_form",
    "cartan_matrix_grading",
    "inner_grading",
    "pauli",
    "pauli_matrices",
    "derivation_algebra",
    "derivation_grading",
    "is_abelian",
    "normalizer",
    "octonions",
    "NotFine",
    "outer_grading_sl",
    "skew_algebra",
    "skew_grading",
    "QTensor",
    "qtensor",
]

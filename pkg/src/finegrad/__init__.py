"""Exact fine gradings on sl_n, so_n and sp_n over cyclotomic fields."""

from .abgroup import AbGroup, smith_normal_form
from .cyclofield import Field, OrderUnavailable, Scalar, make_field, root_of_unity
from .grading import (
    Algebra,
    Character,
    Grading,
    GradingError,
    NotAGrading,
    character_action,
    component_profile,
    eigenspace_refine,
    is_refinement,
    sl_algebra,
    universal_group,
    verify_grading,
)
from .linalg import Matrix, Subspace

__all__ = [
    "AbGroup",
    "smith_normal_form",
    "Field",
    "Scalar",
    "OrderUnavailable",
    "make_field",
    "root_of_unity",
    "Algebra",
    "Character",
    "Grading",
    "GradingError",
    "NotAGrading",
    "character_action",
    "component_profile",
    "eigenspace_refine",
    "is_refinement",
    "sl_algebra",
    "universal_group",
    "verify_grading",
    "Matrix",
    "Subspace",
]

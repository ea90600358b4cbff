"""
迹不等式与 Levi 形式
"""

from .trace_bounds import (
    FlatFamily,
    PairStatus,
    PairResult,
    trace_ratio,
    trace_ratio_from_eigenvalues,
    skew_ratio_bounds,
    vector_defect,
    equality_locus_residual,
    standard_flat_family,
    flat_family_residual,
    is_flat_family,
    stacked_column_rank,
    orthonormalize_pair,
    max_flat_dimension_search,
)
from .levi import (
    SkewCoords,
    LeviForm,
    coordinate_index,
    embed_skew,
    base_point,
    defining_function,
    cubic_defining_function,
    levi_form_at,
    levi_form_finite_difference,
    slice_value,
    slice_identity,
    perturbed_levi_form,
    verify_negative_semidefinite_kernel,
)

__all__ = [
    'FlatFamily',
    'PairStatus',
    'PairResult',
    'trace_ratio',
    'trace_ratio_from_eigenvalues',
    'skew_ratio_bounds',
    'vector_defect',
    'equality_locus_residual',
    'standard_flat_family',
    'flat_family_residual',
    'is_flat_family',
    'stacked_column_rank',
    'orthonormalize_pair',
    'max_flat_dimension_search',
    'SkewCoords',
    'LeviForm',
    'coordinate_index',
    'embed_skew',
    'base_point',
    'defining_function',
    'cubic_defining_function',
    'levi_form_at',
    'levi_form_finite_difference',
    'slice_value',
    'slice_identity',
    'perturbed_levi_form',
    'verify_negative_semidefinite_kernel',
]

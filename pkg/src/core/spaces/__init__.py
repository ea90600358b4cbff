"""
Hermite 对称空间模块

四类经典族的切空间参数化、曲率及极值搜索
"""

from .lie_spaces import (
    FamilyKind,
    HermitianFamily,
    TangentParam,
    CurvatureBounds,
    symplectic_unit,
    project_payload,
    embed_tangent,
    extract_payload,
    center_matrix,
    project_holomorphic,
    sectional_curvature,
    curvature_bounds,
    normalized_curvature_bounds,
    random_tangent,
    locus_witness,
    rank_one_witness,
)
from .extremizer import (
    ExtremizeMode,
    ExtremizeResult,
    extremize_curvature,
)

__all__ = [
    'FamilyKind',
    'HermitianFamily',
    'TangentParam',
    'CurvatureBounds',
    'symplectic_unit',
    'project_payload',
    'embed_tangent',
    'extract_payload',
    'center_matrix',
    'project_holomorphic',
    'sectional_curvature',
    'curvature_bounds',
    'normalized_curvature_bounds',
    'random_tangent',
    'locus_witness',
    'rank_one_witness',
    'ExtremizeMode',
    'ExtremizeResult',
    'extremize_curvature',
]

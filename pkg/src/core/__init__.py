"""
核心模块

包含线性代数、对称空间、迹不等式与 Levi 形式、典范表示、Higgs 场等校验逻辑
"""

from .errors import VerificationError
from .report import LemmaReport, ReportStatus, SubCheck
from .linalg import herm_eig, expm, youla_decompose
from .spaces import HermitianFamily, FamilyKind, sectional_curvature, extremize_curvature
from .lemmas import trace_ratio, orthonormalize_pair, verify_negative_semidefinite_kernel
from .reps import f_star, rho_tot, centralizer, verify_canonical_rep, adjoint_transitivity_check
from .higgs import center_generator, toledo_density, energy_density, milnor_wood_bound

__all__ = [
    'VerificationError',
    'LemmaReport',
    'ReportStatus',
    'SubCheck',
    'herm_eig',
    'expm',
    'youla_decompose',
    'HermitianFamily',
    'FamilyKind',
    'sectional_curvature',
    'extremize_curvature',
    'trace_ratio',
    'orthonormalize_pair',
    'verify_negative_semidefinite_kernel',
    'f_star',
    'rho_tot',
    'centralizer',
    'verify_canonical_rep',
    'adjoint_transitivity_check',
    'center_generator',
    'toledo_density',
    'energy_density',
    'milnor_wood_bound',
]

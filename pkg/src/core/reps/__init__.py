"""
典范表示模块

sl₂ 辅助、f_* / ρ_tot 闭式、中心化子与可迁性
"""

from .sl2 import (
    RealForm,
    Sl2Element,
    K0,
    P1,
    P2,
    group_element,
    random_sl2,
    su11_parameters,
)
from .canonical import (
    CanonicalRep,
    native_form,
    defining_form,
    lie_algebra_residual,
    group_residual,
    f_star,
    rho_tot,
    printed_su_f_star,
    printed_so_rho_tot,
    sl2_basis,
    canonical_rep,
    verify_canonical_rep,
)
from .centralizer import (
    CentralizerResult,
    centralizer,
    table_centralizer_dimension,
    expected_centralizer_dimension,
    centralizer_group_sample,
    so_star_k_split,
    check_centralizer,
)
from .transitivity import (
    unitary_symmetric_log,
    sp_adjoint_residual,
    so_star_orbit_distance,
    su_transport,
    so_transport,
    adjoint_transitivity_check,
)

__all__ = [
    'RealForm',
    'Sl2Element',
    'K0',
    'P1',
    'P2',
    'group_element',
    'random_sl2',
    'su11_parameters',
    'CanonicalRep',
    'native_form',
    'defining_form',
    'lie_algebra_residual',
    'group_residual',
    'f_star',
    'rho_tot',
    'printed_su_f_star',
    'printed_so_rho_tot',
    'sl2_basis',
    'canonical_rep',
    'verify_canonical_rep',
    'CentralizerResult',
    'centralizer',
    'table_centralizer_dimension',
    'expected_centralizer_dimension',
    'centralizer_group_sample',
    'so_star_k_split',
    'check_centralizer',
    'unitary_symmetric_log',
    'sp_adjoint_residual',
    'so_star_orbit_distance',
    'su_transport',
    'so_transport',
    'adjoint_transitivity_check',
]

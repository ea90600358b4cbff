"""
线性代数模块

稠密复矩阵运算与 Youla 分解
"""

from .cmatrix import (
    ComplexMatrix,
    EigenResult,
    cmatrix,
    identity,
    zeros,
    adjoint,
    trace,
    commutator,
    frobenius_norm,
    frobenius_inner,
    hermitian_residual,
    herm_eig,
    expm,
    kernel_basis,
    numerical_rank,
    random_complex,
    random_unitary,
)
from .youla import (
    YoulaDecomposition,
    youla_decompose,
    paired_eigenvalues,
    canonical_block_form,
    skew_residual,
)

__all__ = [
    'ComplexMatrix',
    'EigenResult',
    'cmatrix',
    'identity',
    'zeros',
    'adjoint',
    'trace',
    'commutator',
    'frobenius_norm',
    'frobenius_inner',
    'hermitian_residual',
    'herm_eig',
    'expm',
    'kernel_basis',
    'numerical_rank',
    'random_complex',
    'random_unitary',
    'YoulaDecomposition',
    'youla_decompose',
    'paired_eigenvalues',
    'canonical_block_form',
    'skew_residual',
]

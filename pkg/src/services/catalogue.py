"""
检查目录

把配置中的检查名展开为具体任务（每个任务产出一份 LemmaReport）。
曲率、迹不等式、Youla 三类检查在此组装子检查；
Levi、表示、Higgs 直接调用核心模块的 verify_* 函数
"""

import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from config.settings import Settings
from src.core.errors import NoConvergenceError, PairingFailureError
from src.core.report import LemmaReport, SubCheck
from src.core.linalg import (
    adjoint,
    canonical_block_form,
    frobenius_norm,
    herm_eig,
    numerical_rank,
    paired_eigenvalues,
    random_complex,
    random_unitary,
    youla_decompose,
)
from src.core.spaces import (
    ExtremizeMode,
    FamilyKind,
    HermitianFamily,
    curvature_bounds,
    extremize_curvature,
    locus_witness,
    normalized_curvature_bounds,
    random_tangent,
    rank_one_witness,
    sectional_curvature,
)
from src.core.lemmas import (
    PairStatus,
    equality_locus_residual,
    flat_family_residual,
    max_flat_dimension_search,
    orthonormalize_pair,
    skew_ratio_bounds,
    stacked_column_rank,
    standard_flat_family,
    trace_ratio,
    trace_ratio_from_eigenvalues,
    vector_defect,
    verify_negative_semidefinite_kernel,
)
from src.core.reps import adjoint_transitivity_check, check_centralizer, verify_canonical_rep
from src.core.higgs import verify_higgs_identities, verify_milnor_wood_arithmetic
from src.utils import LoggerFactory, RetryConfig, retry_with_config

logger = LoggerFactory.get_logger(__name__)

WITNESS_COUNT = 100
FLAT_TUPLES = 100

YOULA_RETRY = RetryConfig(max_attempts=3, exceptions=(NoConvergenceError,))
PAIRING_RETRY = RetryConfig(max_attempts=3, exceptions=(PairingFailureError,))

_decompose = retry_with_config(YOULA_RETRY)(youla_decompose)
_pair = retry_with_config(PAIRING_RETRY)(paired_eigenvalues)


@dataclass(frozen=True)
class CheckTask:
    """
    一个待执行的检查

    Attributes:
        name: 报告中的检查名，同时用于派生子种子
        paper_anchor: 出错时报告使用的性质描述
        samples: 报告记录的样本数
        run: 接收子种子、返回报告的函数
    """
    name: str
    paper_anchor: str
    samples: int
    run: Callable[[int], LemmaReport]


# ---------------------------------------------------------------- curvature

def curvature_check(
    fam: HermitianFamily,
    samples: int,
    seed: int,
    restarts: int,
    settings: Settings
) -> LemmaReport:
    """
    曲率界：随机切向量落在界内，两类轨迹见证点取到上下界，极值搜索复现上下界

    Args:
        fam: 群族
        samples: 随机切向量个数
        seed: 子种子
        restarts: 极值搜索的重启次数
        settings: 提供具名阈值

    Returns:
        LemmaReport
    """
    tol = settings.tolerance
    rng = np.random.default_rng(seed)
    bounds = curvature_bounds(fam)

    worst = 0.0
    for _ in range(samples):
        k = sectional_curvature(random_tangent(fam, rng))
        worst = max(worst, bounds.lower - k, k - bounds.upper)

    witnesses = min(samples, WITNESS_COUNT)
    upper_gap = max(abs(sectional_curvature(locus_witness(fam, rng)) - bounds.upper) for _ in range(witnesses))
    lower_gap = max(abs(sectional_curvature(rank_one_witness(fam, rng)) - bounds.lower) for _ in range(witnesses))

    normalized = normalized_curvature_bounds(fam)
    normalized_gap = max(abs(normalized.lower + 1.0), abs(normalized.upper + 1.0 / fam.real_rank))

    checks = [
        SubCheck.measure('random_within_bounds', worst, tol.bound,
                         note=f'[{bounds.lower:g}, {bounds.upper:g}]'),
        SubCheck.measure('upper_attained_on_locus', upper_gap, tol.identity),
        SubCheck.measure('lower_attained_on_rank_one', lower_gap, tol.identity),
        SubCheck.measure('normalized_bounds', normalized_gap, tol.identity,
                         note=f'rank={fam.real_rank}'),
    ]

    for offset, (mode, target) in enumerate(((ExtremizeMode.MIN, bounds.lower), (ExtremizeMode.MAX, bounds.upper))):
        result = extremize_curvature(fam, mode, restarts, seed + offset)
        checks.append(SubCheck.measure(
            f'extremizer_{mode.value}',
            abs(result.value - target),
            tol.extremizer,
            note=f'found={result.value:.12g}'
        ))

    claim = f'{fam.label} 的全纯截面曲率取值于 [{bounds.lower:g}, {bounds.upper:g}] 且两端可达'
    return LemmaReport.from_subchecks(f'curvature:{fam.token}', claim, checks, samples, seed)


# -------------------------------------------------------------------- trace

def ratio_bounds(fam: HermitianFamily) -> tuple:
    """trace_ratio 的理论上下界；SO(p,2) 返回归一化向量亏量的范围"""
    if fam.kind == FamilyKind.SU_PQ:
        return 1.0 / fam.q, 1.0
    if fam.kind == FamilyKind.SP_2N:
        return 1.0 / fam.n, 1.0
    if fam.kind == FamilyKind.SOSTAR_2N:
        return skew_ratio_bounds(fam.n)
    return 0.0, 1.0


def expected_flat_dimension(fam: HermitianFamily) -> Optional[int]:
    """轨迹上线性子空间的最大维数；无结论的族返回 None"""
    if fam.kind == FamilyKind.SU_PQ:
        return fam.p // fam.q
    if fam.kind == FamilyKind.SO_P2:
        return 1
    if fam.kind == FamilyKind.SOSTAR_2N and fam.n >= 4:
        return 1
    return None


def _worked_example(fam: HermitianFamily, tolerance: float) -> List[SubCheck]:
    """A = A₁, B = (A₁+A₂)/√2 ⇒ λ = 2+√2, μ = 2, B' = A₂/√2"""
    members = standard_flat_family(fam.p, fam.q).members
    A1, A2 = np.asarray(members[0]), np.asarray(members[1])
    result = orthonormalize_pair(A1, (A1 + A2) / math.sqrt(2.0))
    if result.status != PairStatus.MODIFIED:
        return [SubCheck.failure('worked_example', '期望 Modified，得到 Dependent')]
    residual = max(
        abs(result.lam - (2.0 + math.sqrt(2.0))),
        abs(result.mu - 2.0),
        frobenius_norm(np.asarray(result.b_prime) - A2 / math.sqrt(2.0)),
    )
    orthogonality = frobenius_norm(adjoint(np.asarray(result.normalized)) @ A1)

    dependent = orthonormalize_pair(A1, A1)
    return [
        SubCheck.measure('worked_example', residual, tolerance, note=f'λ={result.lam:.12g}, μ={result.mu:.12g}'),
        SubCheck.measure('pair_orthogonality', orthogonality, tolerance),
        SubCheck.measure('pair_dependent', 0.0 if dependent.status == PairStatus.DEPENDENT else 1.0, 0.0),
    ]


def trace_check(
    fam: HermitianFamily,
    samples: int,
    seed: int,
    trials: int,
    restarts: int,
    settings: Settings
) -> LemmaReport:
    """
    迹不等式：随机样本满足比值界，轨迹见证点落在等号集上，
    曲率闭式与直接计算一致；SU 族另查标准平坦族与正交化算例，
    并与平坦子空间搜索的最大维数比对
    """
    tol = settings.tolerance
    rng = np.random.default_rng(seed)
    lower, upper = ratio_bounds(fam)

    worst = 0.0
    oracle = 0.0
    closed_form = 0.0
    for _ in range(samples):
        t = random_tangent(fam, rng)
        payload = np.asarray(t.payload)
        if fam.kind == FamilyKind.SO_P2:
            norm4 = frobenius_norm(payload) ** 4
            defect = vector_defect(payload) / norm4
            worst = max(worst, lower - defect, defect - upper)
            k = -1.0 + 0.5 * (1.0 - defect)
        else:
            ratio = trace_ratio(payload)
            worst = max(worst, lower - ratio, ratio - upper)
            oracle = max(oracle, abs(ratio - trace_ratio_from_eigenvalues(payload)))
            k = -2.0 * ratio
        closed_form = max(closed_form, abs(k - sectional_curvature(t)))

    witnesses = min(samples, WITNESS_COUNT)
    locus = max(equality_locus_residual(fam, locus_witness(fam, rng)) for _ in range(witnesses))

    checks = [
        SubCheck.measure('ratio_within_bounds', worst, tol.bound, note=f'[{lower:.6g}, {upper:.6g}]'),
        SubCheck.measure('curvature_closed_form', closed_form, tol.identity),
        SubCheck.measure('locus_witness_residual', locus, tol.identity),
    ]
    if fam.kind != FamilyKind.SO_P2:
        checks.append(SubCheck.measure('eigenvalue_oracle', oracle, tol.identity))

    if fam.kind == FamilyKind.SU_PQ:
        flat = standard_flat_family(fam.p, fam.q)
        checks.append(SubCheck.measure(
            'standard_flat_family',
            flat_family_residual(flat.members, rng, tuples=FLAT_TUPLES),
            tol.identity,
            note=f'dim={flat.dimension}'
        ))
        rank = stacked_column_rank(flat.members)
        checks.append(SubCheck.measure(
            'stacked_injectivity',
            abs(rank - flat.dimension * fam.q),
            0.0,
            note=f'rank={rank}'
        ))
        if flat.dimension >= 2:
            checks.extend(_worked_example(fam, tol.identity))

    expected = expected_flat_dimension(fam)
    if expected is not None:
        found = max_flat_dimension_search(fam, trials, seed, restarts=restarts)
        checks.append(SubCheck.measure(
            'max_flat_dimension',
            abs(found - expected),
            0.0,
            note=f'found={found}, expected={expected}'
        ))

    claim = f'{fam.label} 的迹比值满足 [{lower:.6g}, {upper:.6g}]，等号集与平坦子空间维数与理论一致'
    return LemmaReport.from_subchecks(f'trace:{fam.token}', claim, checks, samples, seed)


# -------------------------------------------------------------------- youla

def _random_skew(n: int, rng: np.random.Generator, degenerate: bool) -> np.ndarray:
    if not degenerate:
        X = np.asarray(random_complex((n, n), rng))
        return X - X.T
    # 重复模与零块
    sigma = 0.5 + rng.random()
    sigmas = tuple([sigma] * (n // 2 - 1) + [0.0]) if n >= 4 else (sigma,)
    U = np.asarray(random_unitary(n, rng))
    return U.T @ np.asarray(canonical_block_form(sigmas, n)) @ U


def youla_check(samples: int, seed: int, pairing_tol: float, settings: Settings) -> LemmaReport:
    """
    Youla 分解：重构残差、块数等于秩的一半、A*A 特征值成对

    样本阶数在 3…7 间循环，每四个样本有一个带重复模与零块的退化矩阵
    """
    tol = settings.tolerance
    rng = np.random.default_rng(seed)
    reconstruction = unitarity = block_gap = pairing = 0.0

    for i in range(samples):
        n = 3 + i % 5
        A = _random_skew(n, rng, degenerate=(i % 4 == 3))
        decomposition = _decompose(A, tol=tol.identity)
        U = np.asarray(decomposition.U)
        reconstruction = max(reconstruction, decomposition.residual)
        unitarity = max(unitarity, frobenius_norm(adjoint(U) @ U - np.eye(n)))
        rank = numerical_rank(A)
        block_gap = max(block_gap, abs(decomposition.block_count - rank / 2))

        _pair(A, tol=pairing_tol)
        values = np.sort(herm_eig(adjoint(A) @ A).values)[::-1]
        top = float(values[0])
        positive = values[values > 1e-12 * top]
        for j in range(0, len(positive) - 1, 2):
            pairing = max(pairing, abs(positive[j] - positive[j + 1]) / top)

    checks = [
        SubCheck.measure('reconstruction', reconstruction, tol.identity),
        SubCheck.measure('unitarity', unitarity, tol.identity),
        SubCheck.measure('block_count', block_gap, 0.0),
        SubCheck.measure('eigenvalue_pairing', pairing, pairing_tol),
    ]
    claim = '复反对称矩阵经酉合同化为 2×2 块对角形，块数为秩的一半，A*A 的非零特征值成对出现'
    return LemmaReport.from_subchecks('youla', claim, checks, samples, seed)


# ---------------------------------------------------------------- catalogue

def build_tasks(settings: Settings) -> List[CheckTask]:
    """
    按配置顺序展开检查任务

    与群族有关的检查按群族顺序展开；奇数 n 的 SO* 没有可迁性任务

    Args:
        settings: 已校验的配置

    Returns:
        任务列表，顺序即报告顺序
    """
    suite = settings.suite
    families = suite.parsed_families()
    heavy = min(suite.samples, suite.heavy_samples)
    tasks: List[CheckTask] = []

    for check in suite.checks:
        if check == 'curvature':
            for fam in families:
                tasks.append(CheckTask(
                    f'curvature:{fam.token}', f'{fam.label} 曲率界', suite.samples,
                    lambda seed, fam=fam: curvature_check(fam, suite.samples, seed, suite.restarts, settings)
                ))
        elif check == 'trace':
            for fam in families:
                tasks.append(CheckTask(
                    f'trace:{fam.token}', f'{fam.label} 迹不等式', suite.samples,
                    lambda seed, fam=fam: trace_check(fam, suite.samples, seed, suite.trials, suite.restarts, settings)
                ))
        elif check == 'youla':
            tasks.append(CheckTask(
                'youla', 'Youla 分解', heavy,
                lambda seed: youla_check(heavy, seed, suite.tol, settings)
            ))
        elif check == 'levi':
            for n in suite.levi_sizes:
                tasks.append(CheckTask(
                    f'levi:n={n}', f'n={n} Levi 形式', heavy,
                    lambda seed, n=n: verify_negative_semidefinite_kernel(
                        n, heavy, seed, tol=settings.tolerance.eigen
                    )
                ))
        elif check == 'reps':
            for fam in families:
                tasks.append(CheckTask(
                    f'reps:canonical:{fam.token}', f'{fam.label} 典范表示', heavy,
                    lambda seed, fam=fam: verify_canonical_rep(
                        fam, heavy, seed, tol=settings.tolerance.intertwining
                    )
                ))
                tasks.append(CheckTask(
                    f'reps:centralizer:{fam.token}', f'{fam.label} 中心化子', heavy,
                    lambda seed, fam=fam: check_centralizer(fam, heavy, seed)
                ))
                if fam.kind == FamilyKind.SOSTAR_2N and fam.n % 2 == 1:
                    logger.info(f"{fam.label} 为奇数 n，跳过可迁性检查")
                    continue
                tasks.append(CheckTask(
                    f'reps:transitivity:{fam.token}', f'{fam.label} 可迁性', suite.trials,
                    lambda seed, fam=fam: adjoint_transitivity_check(fam, suite.trials, seed)
                ))
        elif check == 'higgs':
            for fam in families:
                tasks.append(CheckTask(
                    f'higgs:{fam.token}', f'{fam.label} Higgs 恒等式', suite.samples,
                    lambda seed, fam=fam: verify_higgs_identities(fam, suite.samples, seed)
                ))
                tasks.append(CheckTask(
                    f'higgs:milnor_wood:{fam.token}', f'{fam.label} Milnor–Wood 算术', 1,
                    lambda seed, fam=fam: verify_milnor_wood_arithmetic(fam, seed)
                ))

    return tasks

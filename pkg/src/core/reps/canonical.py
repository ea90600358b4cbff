"""
各族的典范表示

f_*: sl₂ → g 的闭式、群同态 ρ_tot 的闭式（SU、Sp、SO₀），
李代数/群的成员残差，以及同态、成员、交换图与轨迹条件的校验
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from src.core.errors import BadFamilyError, NoClosedFormError, NotInGroupError, VerificationError
from src.core.lemmas.trace_bounds import equality_locus_residual
from src.core.linalg.cmatrix import (
    ComplexMatrix,
    adjoint,
    cmatrix,
    commutator,
    expm,
    frobenius_norm,
)
from src.core.report import LemmaReport, SubCheck
from src.core.reps.sl2 import (
    GROUP_TOL,
    K0,
    P1,
    P2,
    RealForm,
    Sl2Element,
    group_element,
    group_form_residual,
    random_sl2,
    su11_parameters,
)
from src.core.spaces.lie_spaces import (
    FamilyKind,
    HermitianFamily,
    extract_payload,
    project_holomorphic,
    symplectic_unit,
)
from src.utils import LoggerFactory

logger = LoggerFactory.get_logger(__name__)

MEMBERSHIP_TOL = 1e-12
BRACKET_TOL = 1e-12
LOCUS_TOL = 1e-10

FStar = Callable[[HermitianFamily, Sl2Element], ComplexMatrix]
RhoTot = Callable[[HermitianFamily, np.ndarray], ComplexMatrix]


def native_form(fam: HermitianFamily) -> RealForm:
    """闭式所用的实形式：Sp 用 sl₂(ℝ)，其余用 su(1,1)"""
    return RealForm.SL2R if fam.kind == FamilyKind.SP_2N else RealForm.SU11


def defining_form(fam: HermitianFamily) -> ComplexMatrix:
    """
    G 的不变形式

    SU: J = diag(I_p, −I_q)；Sp、SO*: Ω = [[0, I_n], [−I_n, 0]]；SO₀: diag(I_n, −I_2)
    """
    N = fam.matrix_size
    if fam.kind == FamilyKind.SU_PQ:
        return cmatrix(np.diag(np.concatenate([np.ones(fam.p), -np.ones(fam.q)])))
    if fam.kind == FamilyKind.SO_P2:
        return cmatrix(np.diag(np.concatenate([np.ones(fam.p), -np.ones(2)])))
    n = fam.p
    omega = np.zeros((N, N), dtype=np.complex128)
    omega[:n, n:] = np.eye(n)
    omega[n:, :n] = -np.eye(n)
    return cmatrix(omega, copy=False)


def lie_algebra_residual(fam: HermitianFamily, X: ComplexMatrix) -> float:
    """
    X ∈ g 的残差

    SU: ‖X*J + JX‖ + |tr X|；Sp: ‖X*Ω + ΩX‖ + ‖Im X‖；
    SO₀: ‖X*J + JX‖ + ‖Im X‖；SO*: ‖X + Xᵗ‖ + ‖X*Ω + ΩX‖
    """
    X = np.asarray(X, dtype=np.complex128)
    F = np.asarray(defining_form(fam))
    form = frobenius_norm(adjoint(X) @ F + F @ X)
    if fam.kind == FamilyKind.SU_PQ:
        return form + abs(np.trace(X))
    if fam.kind == FamilyKind.SOSTAR_2N:
        return form + frobenius_norm(X + X.T)
    return form + float(np.linalg.norm(np.imag(X)))


def group_residual(fam: HermitianFamily, g: ComplexMatrix) -> float:
    """
    g ∈ G 的残差

    SU: ‖g*Jg − J‖ + |det g − 1|；Sp: ‖gᵗΩg − Ω‖ + ‖Im g‖；
    SO₀: ‖gᵗJg − J‖ + ‖Im g‖ + |det g − 1|；SO*: ‖gᵗg − I‖ + ‖g*Ωg − Ω‖
    """
    g = np.asarray(g, dtype=np.complex128)
    F = np.asarray(defining_form(fam))
    form = frobenius_norm(adjoint(g) @ F @ g - F)
    if fam.kind == FamilyKind.SU_PQ:
        return form + abs(np.linalg.det(g) - 1.0)
    if fam.kind == FamilyKind.SP_2N:
        return form + float(np.linalg.norm(np.imag(g)))
    if fam.kind == FamilyKind.SO_P2:
        return form + float(np.linalg.norm(np.imag(g))) + abs(np.linalg.det(g) - 1.0)
    return form + frobenius_norm(g.T @ g - np.eye(g.shape[0]))


def _so_star_units(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """(J, P)：J 为补零的辛单位，P = −J² 为其支撑上的单位阵"""
    J = np.asarray(symplectic_unit(n))
    return J, -(J @ J)


def f_star(fam: HermitianFamily, x: Sl2Element) -> ComplexMatrix:
    """
    典范李代数同态

    SU(p,q): 按 (q, p−q, q) 分块 [[iaI, 0, βI], [0, 0, 0], [β̄I, 0, −iaI]]
    Sp(2n):  [[aI, bI], [cI, −aI]]（sl₂(ℝ) 写法）
    SO₀(n,2): (0,n) = (n,0) = 2b，(0,n+1) = (n+1,0) = 2c，(n,n+1) = 2a，(n+1,n) = −2a
    SO*(2n): [[ibJ, aP + icJ], [−aP + icJ, −ibJ]]，P = −J²（偶数 n 时 P = I）

    Raises:
        BadFamilyError: 群族不受支持
    """
    X = np.asarray(x.to_form(native_form(fam)).matrix)
    N = fam.matrix_size
    M = np.zeros((N, N), dtype=np.complex128)

    if fam.kind == FamilyKind.SU_PQ:
        p, q = fam.p, fam.q
        eye = np.eye(q)
        M[:q, :q] = X[0, 0] * eye
        M[:q, p:] = X[0, 1] * eye
        M[p:, :q] = X[1, 0] * eye
        M[p:, p:] = X[1, 1] * eye
        return cmatrix(M, copy=False)

    if fam.kind == FamilyKind.SP_2N:
        n = fam.p
        a, b, c = np.real(X[0, 0]), np.real(X[0, 1]), np.real(X[1, 0])
        M[:n, :n] = a * np.eye(n)
        M[:n, n:] = b * np.eye(n)
        M[n:, :n] = c * np.eye(n)
        M[n:, n:] = -a * np.eye(n)
        return cmatrix(M, copy=False)

    a, b, c = x.coordinates()
    n = fam.p
    if fam.kind == FamilyKind.SO_P2:
        M[0, n] = M[n, 0] = 2.0 * b
        M[0, n + 1] = M[n + 1, 0] = 2.0 * c
        M[n, n + 1] = 2.0 * a
        M[n + 1, n] = -2.0 * a
        return cmatrix(M, copy=False)

    if fam.kind == FamilyKind.SOSTAR_2N:
        J, P = _so_star_units(n)
        M[:n, :n] = 1j * b * J
        M[:n, n:] = a * P + 1j * c * J
        M[n:, :n] = -a * P + 1j * c * J
        M[n:, n:] = -1j * b * J
        return cmatrix(M, copy=False)

    raise BadFamilyError("不支持的群族", {'family': str(fam)})


def printed_su_f_star(fam: HermitianFamily, x: Sl2Element) -> ComplexMatrix:
    """SU 的印刷版本：中间块写成 I_{p−q}（不在 su(p,q) 中，用作反例）"""
    if fam.kind != FamilyKind.SU_PQ:
        raise BadFamilyError("印刷版本只针对 SU(p,q)", {'family': str(fam)})
    M = np.array(f_star(fam, x))
    p, q = fam.p, fam.q
    M[q:p, q:p] = np.eye(p - q)
    return cmatrix(M, copy=False)


def _native_group(fam: HermitianFamily, g: np.ndarray) -> np.ndarray:
    g = np.asarray(g, dtype=np.complex128)
    form = native_form(fam)
    residual = group_form_residual(g, form) if g.shape == (2, 2) else float('inf')
    if residual > GROUP_TOL:
        raise NotInGroupError(
            "群元素不属于所要求的实形式",
            {'form': form.value, 'residual': residual, 'tol': GROUP_TOL}
        )
    return g


def _so_rho(fam: HermitianFamily, g: np.ndarray, printed: bool) -> ComplexMatrix:
    alpha, beta = su11_parameters(g)
    n = fam.p
    R = np.eye(n + 2, dtype=np.complex128)
    ab = alpha * beta
    ab_bar = alpha * np.conj(beta)
    plus = alpha ** 2 + beta ** 2
    minus = alpha ** 2 - beta ** 2

    R[0, 0] = 2.0 * abs(beta) ** 2 + 1.0
    R[n, 0] = 2.0 * ab.real
    R[n + 1, 0] = -2.0 * ab.imag
    R[0, n] = 2.0 * ab_bar.real
    R[n, n] = plus.real
    R[n + 1, n] = -plus.imag
    R[0, n + 1] = 2.0 * ab_bar.imag
    R[n, n + 1] = plus.imag if printed else minus.imag
    R[n + 1, n + 1] = minus.real
    return cmatrix(R, copy=False)


def rho_tot(fam: HermitianFamily, g: np.ndarray) -> ComplexMatrix:
    """
    典范群同态

    SU: [[αI, 0, βI], [0, I, 0], [β̄I, 0, ᾱI]]；Sp: [[aI, bI], [cI, dI]]；
    SO₀: 只在 {0, n, n+1} 三个坐标上非平凡的闭式

    Raises:
        NotInGroupError: g 不在 SU(1,1) / SL₂(ℝ) 中
        NoClosedFormError: SO*(2n)
    """
    if fam.kind == FamilyKind.SOSTAR_2N:
        raise NoClosedFormError("SO*(2n) 没有群层面的闭式，只能用 expm ∘ f_*", {'family': str(fam)})
    g = _native_group(fam, g)
    N = fam.matrix_size
    R = np.zeros((N, N), dtype=np.complex128)

    if fam.kind == FamilyKind.SU_PQ:
        p, q = fam.p, fam.q
        eye = np.eye(q)
        R[:q, :q] = g[0, 0] * eye
        R[:q, p:] = g[0, 1] * eye
        R[p:, :q] = g[1, 0] * eye
        R[p:, p:] = g[1, 1] * eye
        R[q:p, q:p] = np.eye(p - q)
        return cmatrix(R, copy=False)

    if fam.kind == FamilyKind.SP_2N:
        n = fam.p
        g = np.real(g)
        R[:n, :n] = g[0, 0] * np.eye(n)
        R[:n, n:] = g[0, 1] * np.eye(n)
        R[n:, :n] = g[1, 0] * np.eye(n)
        R[n:, n:] = g[1, 1] * np.eye(n)
        return cmatrix(R, copy=False)

    return _so_rho(fam, g, printed=False)


def printed_so_rho_tot(fam: HermitianFamily, g: np.ndarray) -> ComplexMatrix:
    """SO₀ 的印刷版本：(n, n+1) 元为 Im(α² + β²)（不是同态，用作反例）"""
    if fam.kind != FamilyKind.SO_P2:
        raise BadFamilyError("印刷版本只针对 SO₀(n,2)", {'family': str(fam)})
    return _so_rho(fam, _native_group(fam, g), printed=True)


def sl2_basis() -> List[Sl2Element]:
    return [Sl2Element(K0, RealForm.SU11), Sl2Element(P1, RealForm.SU11), Sl2Element(P2, RealForm.SU11)]


@dataclass(frozen=True)
class CanonicalRep:
    """
    典范表示

    Attributes:
        family: 群族
        f_star_images: f_*(K0), f_*(P1), f_*(P2)
        rho_tot: 群层面闭式（SO* 为 None）
        defining_form: G 的不变形式
    """
    family: HermitianFamily
    f_star_images: Tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]
    rho_tot: Optional[RhoTot]
    defining_form: ComplexMatrix

    def group_image(self, x: Sl2Element) -> ComplexMatrix:
        """ρ_tot(exp x)，SO* 退回 expm(f_*(x))"""
        if self.rho_tot is None:
            return expm(f_star(self.family, x))
        return self.rho_tot(self.family, np.asarray(group_element(x.to_form(native_form(self.family)))))

    def holomorphic_direction(self) -> ComplexMatrix:
        """f_*(P1) 在 p^{1,0} 上的分量"""
        return project_holomorphic(self.family, self.f_star_images[1])


def canonical_rep(fam: HermitianFamily, f: FStar = f_star) -> CanonicalRep:
    images = tuple(f(fam, x) for x in sl2_basis())
    rho = None if fam.kind == FamilyKind.SOSTAR_2N else rho_tot
    return CanonicalRep(family=fam, f_star_images=images, rho_tot=rho, defining_form=defining_form(fam))


def verify_canonical_rep(
    fam: HermitianFamily,
    samples: int,
    seed: int,
    tol: float,
    f: FStar = f_star,
    rho: Optional[RhoTot] = None
) -> LemmaReport:
    """
    校验典范表示

    (a) 随机元素对上的括号保持；(b) 像落在 g 中；
    (c) expm(f_*(x)) = ρ_tot(exp x)，‖x‖ ≤ 2（SO* 跳过）；
    (d) f_*(p^{1,0}) 落在最大曲率轨迹上；另检查 ρ_tot 的乘法性

    Args:
        fam: 群族
        samples: 随机样本数
        seed: 随机种子
        tol: 交换图的容差
        f: 李代数同态（可替换为印刷版本做反例）
        rho: 群同态（默认取闭式）

    Returns:
        LemmaReport
    """
    rng = np.random.default_rng(seed)
    form = native_form(fam)
    has_closed_form = fam.kind != FamilyKind.SOSTAR_2N
    rho = rho or (rho_tot if has_closed_form else None)

    bracket = membership = intertwining = multiplicative = group = 0.0
    for _ in range(samples):
        x = random_sl2(rng, form)
        y = random_sl2(rng, form)
        fx = f(fam, x)
        fy = f(fam, y)
        scale = max(1.0, frobenius_norm(fx) * frobenius_norm(fy))
        bracket = max(bracket, frobenius_norm(commutator(fx, fy) - f(fam, x.bracket(y))) / scale)
        membership = max(membership, lie_algebra_residual(fam, fx) / max(1.0, frobenius_norm(fx)))

        if rho is not None:
            gx = np.asarray(group_element(x))
            gy = np.asarray(group_element(y))
            rx = np.asarray(rho(fam, gx))
            ry = np.asarray(rho(fam, gy))
            intertwining = max(intertwining, frobenius_norm(expm(fx) - rx) / max(1.0, frobenius_norm(rx)))
            product = np.asarray(rho(fam, gx @ gy))
            multiplicative = max(
                multiplicative,
                frobenius_norm(product - rx @ ry) / max(1.0, frobenius_norm(product))
            )
            group = max(group, group_residual(fam, rx) / max(1.0, frobenius_norm(rx)))
        else:
            ex = np.asarray(expm(fx))
            group = max(group, group_residual(fam, ex) / max(1.0, frobenius_norm(ex)))

    checks = [
        SubCheck.measure('bracket', bracket, BRACKET_TOL * 100),
        SubCheck.measure('membership', membership, MEMBERSHIP_TOL * 100),
    ]
    if rho is not None:
        checks.append(SubCheck.measure('intertwining', intertwining, tol))
        checks.append(SubCheck.measure('multiplicative', multiplicative, tol))
    checks.append(SubCheck.measure('group_membership', group, tol))

    rep = canonical_rep(fam, f)
    direction = np.asarray(project_holomorphic(fam, rep.f_star_images[1]))
    try:
        residual = equality_locus_residual(fam, extract_payload(fam, direction))
        checks.append(SubCheck.measure('holomorphic_on_locus', residual, LOCUS_TOL))
    except VerificationError as exc:
        checks.append(SubCheck.failure('holomorphic_on_locus', f'{type(exc).__name__}: {exc}'))

    claim = (
        f'{fam.label} 的典范 sl₂ 表示保持括号、像在 g 中、与群同态交换，'
        f'且全纯方向落在最大曲率轨迹上'
    )
    report = LemmaReport.from_subchecks(f'reps:canonical:{fam.token}', claim, checks, samples, seed)
    logger.info(f"{fam.label} 典范表示校验: {report.status.value}, max_residual={report.max_residual:.3e}")
    return report

"""
共轭判定主流程

1. 迹与行列式不变量
2. 两个矩阵都是三角阵: 在 deg U <= δ 中做 F_p 线性搜索
3. 其中一个是对角阵: 本原左特征向量构造见证
4. 一般情形: 置换使 a21, b21 != 0, 先在 deg U <= δ 中线性搜索,
   再约化为二次关系, 按情形求解范数方程, 用整除条件筛选, 恢复 p, q 并验证
见证按找到的先后返回, 不保证次数最小。
"""
import logging
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from .bounds import (
    CASE_DIAGONAL,
    CASE_IDENTICAL,
    CASE_MISMATCH,
    CASE_SCALAR,
    CASE_TRIANGULAR,
    bound_for_case,
)
from .certificate import Certificate, Reason, Verdict, verify_witness
from .matrix import Matrix2, max_degree
from .reduction import QuadraticRelation, alpha_classes, normalize_pair
from ..algebra.normsolver import (
    DivisibilityForm,
    iter_filtered,
    iter_imaginary,
    solve_rational,
)
from ..algebra.quadring import QuadCase, QuadContext
from ..arithmetic.linalg import enumerate_affine, kernel_basis, linear_map_matrix, split_vector
from ..arithmetic.poly import Poly, poly_gcd, poly_lcm
from ..core.config import settings
from ..exceptions import BudgetExceeded, InternalInvariantViolation, InvalidInput

logger = logging.getLogger(__name__)

Pair = Tuple[Poly, Poly]


# -------------------------------------------------------------------- 线性搜索


def kernel_witnesses(A: Matrix2, B: Matrix2, max_deg: int) -> Iterator[Matrix2]:
    """
    U*A = B*U 且 deg U <= max_deg 的全部可逆解
    U -> U*A - B*U 是 F_p-线性映射, 枚举其核; 核超过 LINEAR_SEARCH_CEILING 时抛出 BudgetExceeded。
    """
    F = A.field
    degs = [max_deg] * 4

    def residual(u: Poly, p: Poly, v: Poly, q: Poly) -> List[Poly]:
        U = Matrix2(u, p, v, q)
        return list((U * A - B * U).entries())

    out_len = max_deg + max(int(max_degree(A, B)), 0) + 1
    M = linear_map_matrix(F, residual, degs, out_len)
    basis = kernel_basis(M, F.p)
    vectors = enumerate_affine(
        np.zeros(M.shape[1], dtype=np.int64), basis, F.p, settings.LINEAR_SEARCH_CEILING
    )
    for vec in vectors:
        U = Matrix2(*split_vector(F, vec, degs))
        if U.is_invertible():
            yield U


def low_degree_witness(A: Matrix2, B: Matrix2, max_deg: int) -> Tuple[Optional[Matrix2], bool]:
    """
    依次在 deg U <= 0, 1, ..., max_deg 中找共轭矩阵
    返回 (见证, 是否穷举完毕); 某一层的核超过上限时返回 (None, False)。
    """
    for d in range(max(max_deg, 0) + 1):
        try:
            U = next(kernel_witnesses(A, B, d), None)
        except BudgetExceeded as e:
            logger.info(f"deg U <= {d} 的核过大, 停止线性搜索: {e.message}")
            return None, False
        if U is not None:
            logger.debug(f"线性搜索在 deg U <= {d} 找到见证")
            return U, True
    return None, True


# -------------------------------------------------------------------- 三角情形


def _to_upper(M: Matrix2) -> Tuple[Matrix2, Matrix2]:
    F = M.field
    if M.is_upper_triangular():
        return M, Matrix2.identity(F)
    S = Matrix2.swap(F)
    return S * M * S, S


def triangular_search(A: Matrix2, B: Matrix2, delta: int) -> Tuple[Optional[Matrix2], bool]:
    """
    两个三角阵在 deg U <= δ 中的共轭矩阵
    返回 (见证, 是否穷举完毕); 核超过上限时返回 (None, False)。
    """
    A1, S_A = _to_upper(A)
    B1, S_B = _to_upper(B)
    U1, exhaustive = low_degree_witness(A1, B1, delta)
    if U1 is None:
        if not exhaustive:
            logger.info("三角情形的核过大, 转入一般流程")
        return None, exhaustive
    return S_B * U1 * S_A, True


# -------------------------------------------------------------------- 对角情形


def primitive_left_eigenvector(A: Matrix2, lam: Poly) -> Pair:
    """r*(A - λI) = 0 的本原解"""
    r = (A.a21, lam - A.a11)
    if not r[0].coeffs and not r[1].coeffs:
        r = (A.a22 - lam, -A.a12)
    if not r[0].coeffs and not r[1].coeffs:
        raise InvalidInput(f"{A} 是数量矩阵, 特征向量不唯一")
    g = poly_gcd(r[0], r[1])
    return r[0] // g, r[1] // g


def _unit_quotient(num: Poly, den: Poly) -> bool:
    quotient = num.exact_div(den)
    return quotient is not None and bool(quotient.coeffs) and quotient.deg == 0


def printed_diagonal_criterion(A: Matrix2, B: Matrix2) -> Optional[bool]:
    """
    B 为对角阵时的 gcd 判别式
    一般子情形: a12(b22-b11) / (gcd(a11-b11, a12) gcd(a11-b22, a12)) ∈ F*;
    (a11-b11, a12) = (0, 0) 时:
    ((b11-a22)(b22-a11) - a12 a21) / (gcd(b11-a22, a12) gcd(a11-b22, a12)) ∈ F*。
    gcd 无定义时返回 None。
    """
    a11, a12, a21, a22 = A.entries()
    b11, b22 = B.a11, B.a22
    e1, e2 = a11 - b11, a11 - b22
    if e1.coeffs or a12.coeffs:
        if not (e2.coeffs or a12.coeffs):
            return None
        return _unit_quotient(a12 * (b22 - b11), poly_gcd(e1, a12) * poly_gcd(e2, a12))
    x, y = b11 - a22, b22 - a11
    if not (x.coeffs or a12.coeffs) or not (y.coeffs or a12.coeffs):
        return None
    return _unit_quotient(x * y - a12 * a21, poly_gcd(x, a12) * poly_gcd(y, a12))


def diagonal_witness(A: Matrix2, B: Matrix2) -> Tuple[Optional[Matrix2], Optional[bool]]:
    """
    B = diag(λ1, λ2), λ1 != λ2
    U 的两行是 A 对 λ1, λ2 的本原左特征向量, 共轭当且仅当 det U ∈ F*
    """
    r1 = primitive_left_eigenvector(A, B.a11)
    r2 = primitive_left_eigenvector(A, B.a22)
    U = Matrix2(r1[0], r1[1], r2[0], r2[1])
    printed = printed_diagonal_criterion(A, B)
    found = U.is_invertible()
    if printed is not None and printed != found:
        logger.warning(f"对角判别式给出 {printed}, 构造给出 {found}: A={A}, B={B}")
    return (U if found else None), printed


# -------------------------------------------------------------------- 一般情形


def candidate_pairs(ctx: QuadContext, d_n: Poly, forms: List[DivisibilityForm]) -> Iterator[Pair]:
    """规范化坐标中的候选 (u_n, v), 按 deg v 从低到高"""
    F = ctx.field
    if ctx.case == QuadCase.REAL:
        for w in iter_filtered(ctx, d_n, forms):
            yield w.u, w.v
        return
    if ctx.case == QuadCase.IMAGINARY:
        yield from iter_imaginary(ctx, d_n)
        return
    rational = solve_rational(ctx, d_n)
    yield from rational.points
    # 整除条件只依赖 t 模各个模的余数
    span = Poly.one(F)
    for _, _, m in forms:
        span = poly_lcm(span, m)
    for family in rational.families:
        yield from family.instances(int(span.deg) - 1)


def _satisfies(forms: List[DivisibilityForm], u: Poly, v: Poly) -> bool:
    return all(m.divides(cu * u + cv * v) for cu, cv, m in forms)


def _alpha_index(relations: List[QuadraticRelation], U: Matrix2) -> int:
    """det U 所在平方类对应的 α 分支"""
    F = U.field
    det = U.det().coeffs[0]
    for i, rel in enumerate(relations):
        if F.is_square(F.div(det, rel.alpha)):
            return i
    raise InternalInvariantViolation(f"det U = {F.format(det)} 不属于任何 α 分支", {"U": str(U)})


def general_witness(A: Matrix2, B: Matrix2, transcript: Dict[str, Any]) -> Tuple[Optional[Matrix2], str]:
    """
    一般情形, 返回 (第一个通过验证的见证, 产生它的分支的情形标签)
    先在 deg U <= δ 中线性搜索, 找不到再逐个 α 分支走范数方程。
    """
    pair = normalize_pair(A, B)
    transcript["swapped"] = list(pair.swapped)
    relations = [QuadraticRelation.build(pair.A, pair.B, alpha) for alpha in alpha_classes(A)]
    contexts = [rel.context() for rel in relations]
    branches = [
        {"alpha": rel.alpha, "case": ctx.case.value, "context": ctx.describe(), "route": None}
        for rel, ctx in zip(relations, contexts)
    ]
    transcript["branches"] = branches

    U1, _ = low_degree_witness(pair.A, pair.B, transcript["delta"])
    if U1 is not None:
        branch = branches[_alpha_index(relations, U1)]
        branch["route"] = "linear"
        return pair.lift(U1), branch["case"]

    for rel, ctx, branch in zip(relations, contexts, branches):
        forms = rel.divisibility_forms(ctx)
        d_n = rel.normalized_rhs(ctx)
        for u_n, v in candidate_pairs(ctx, d_n, forms):
            if not _satisfies(forms, u_n, v):
                continue
            mapped = ctx.transform.to_original(u_n, v)
            if mapped is None:
                continue
            U1 = rel.reconstruct(*mapped)
            if U1 is None or not verify_witness(pair.A, pair.B, U1):
                continue
            branch["route"] = "norm"
            logger.debug(f"α = {rel.alpha}: {ctx.describe()}, 范数方程给出见证")
            return pair.lift(U1), branch["case"]
        branch["route"] = "exhausted"
        logger.debug(f"α = {rel.alpha}: {ctx.describe()}, 没有见证")
    return None, branches[0]["case"]


# -------------------------------------------------------------------- 入口


def _not_conjugate(A: Matrix2, B: Matrix2, reason: Reason, case: str,
                   transcript: Dict[str, Any]) -> Certificate:
    logger.info(f"不共轭: {reason.value} ({case})")
    bound = bound_for_case(A.field, transcript["delta"], case)
    return Certificate(A=A, B=B, verdict=Verdict.NOT_CONJUGATE, reason=reason, case=case,
                       bound=bound, transcript=transcript)


def _conjugate(A: Matrix2, B: Matrix2, U: Matrix2, case: str,
               transcript: Dict[str, Any]) -> Certificate:
    bound = bound_for_case(A.field, transcript["delta"], case)
    if U.degree > bound:
        if case == QuadCase.REAL.value:
            raise InternalInvariantViolation(
                f"见证次数 {U.degree} 超过实情形的界 {bound}",
                {"A": str(A), "B": str(B), "U": str(U), **transcript},
            )
        logger.warning(f"见证次数 {U.degree} 超过 {case} 情形的界 {bound}")
    logger.info(f"共轭 ({case}), 见证次数 {max(U.degree, 0)}")
    return Certificate(A=A, B=B, verdict=Verdict.CONJUGATE, witness=U, case=case,
                       bound=bound, transcript=transcript)


def decide(A: Matrix2, B: Matrix2) -> Certificate:
    """判定 A 与 B 是否在 GL(2, F_q[x]) 中共轭"""
    if A.field != B.field:
        raise InvalidInput("A 与 B 不在同一个域上")
    F = A.field
    transcript: Dict[str, Any] = {"delta": max_degree(A, B), "field": F.describe()}

    if A.trace() != B.trace():
        return _not_conjugate(A, B, Reason.TRACE_MISMATCH, CASE_MISMATCH, transcript)
    if A.det() != B.det():
        return _not_conjugate(A, B, Reason.DET_MISMATCH, CASE_MISMATCH, transcript)
    if A == B:
        return _conjugate(A, B, Matrix2.identity(F), CASE_IDENTICAL, transcript)
    if A.is_scalar() or B.is_scalar():
        return _not_conjugate(A, B, Reason.SOLUTION_SET_EXHAUSTED, CASE_SCALAR, transcript)

    label = ""
    if A.is_triangular() and B.is_triangular():
        label = CASE_TRIANGULAR
        U, exhaustive = triangular_search(A, B, transcript["delta"])
        if U is not None:
            return _conjugate(A, B, U, CASE_TRIANGULAR, transcript)
        if exhaustive:
            return _not_conjugate(A, B, Reason.SOLUTION_SET_EXHAUSTED, CASE_TRIANGULAR, transcript)

    if A.is_diagonal() or B.is_diagonal():
        if B.is_diagonal():
            U, printed = diagonal_witness(A, B)
        else:
            V, printed = diagonal_witness(B, A)
            U = V.inverse() if V is not None else None
        transcript["printed_criterion"] = printed
        if U is None:
            return _not_conjugate(A, B, Reason.DIAGONAL_CRITERION_FAILED, CASE_DIAGONAL, transcript)
        return _conjugate(A, B, U, CASE_DIAGONAL, transcript)

    U, branch_case = general_witness(A, B, transcript)
    case = label or branch_case
    if U is None:
        return _not_conjugate(A, B, Reason.SOLUTION_SET_EXHAUSTED, case, transcript)
    return _conjugate(A, B, U, case, transcript)


__all__ = [
    "decide",
    "kernel_witnesses",
    "low_degree_witness",
    "triangular_search",
    "diagonal_witness",
    "printed_diagonal_criterion",
    "primitive_left_eigenvector",
    "candidate_pairs",
    "general_witness",
]

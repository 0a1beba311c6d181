"""
单位群模块
实情形下范数为 1 的单位: 由连分数周期得到非平凡单位, 再用 gcd 因子枚举找出生成元;
以及奇特征 Pell 方程 u^2 - D*v^2 = 1 的基本解
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .cfrac import PeriodicExpansion, Surd, expand_periodic
from .quadring import QuadCase, QuadContext, QuadInt, classify
from ..arithmetic.laurent import default_precision, with_precision
from ..arithmetic.linalg import solve_char2_quadratic
from ..arithmetic.poly import Poly, poly_divisors, poly_sqrt
from ..exceptions import InternalInvariantViolation, InvalidInput, Unsupported

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnitGroupDescription:
    """U(R) = <ε0> × F* 中的生成元 ε0 与其次数 k"""
    generator: QuadInt
    degree_k: int
    nontrivial: QuadInt
    expansion_period: int

    @property
    def ctx(self) -> QuadContext:
        return self.generator.ctx

    def power(self, n: int) -> QuadInt:
        """ε0^n, 负指数经由共轭"""
        return self.generator ** n


def unit_bound(ctx: QuadContext) -> int:
    """非平凡单位的次数上界: 特征 2 为 m*q^(2m), 奇特征为 δ*q^(3δ+1)"""
    F = ctx.field
    if F.p == 2:
        m = int(ctx.b.deg)
        return m * F.q ** (2 * m)
    delta = int(ctx.c.deg) // 2
    return delta * F.q ** (3 * delta + 1)


def _require_real(ctx: QuadContext) -> None:
    if ctx.case != QuadCase.REAL:
        raise InvalidInput(f"单位群计算要求实情形, 当前为 {ctx.describe()}")


def _starting_surd(ctx: QuadContext) -> Tuple[Surd, Poly]:
    """
    起点 ρ0 以及 ρ0 = s0 + Δ 中的 s0
    特征 2: ρ0 = b + Δ 是约化元; 奇特征: ρ0 = Δ = √c。
    """
    F = ctx.field
    one, zero = Poly.one(F), Poly.zero(F)
    B, C = ctx.min_poly
    prec = default_precision(B, C)
    if F.p == 2:
        # b + Δ 满足同一个方程 t^2 + b t + c = 0, 是次数为正的那个根
        start = with_precision(lambda p: Surd.by_degree(one, B, C, True, p), prec)
        return start, ctx.b
    start = with_precision(lambda p: Surd.matching(one, zero, C, ctx.delta_series(p), p), prec)
    return start, zero


def _period_matrix(exp: PeriodicExpansion) -> Tuple[Poly, Poly]:
    """N = M_{n0+T} * M_{n0}^{-1} 的第二行 (γ, δ')"""
    conv = exp.convergents
    F = conv.field
    n0, T = exp.n0, exp.T
    (p1, p0), (q1, q0) = conv.matrix(n0 + T)
    (r1, r0), (s1, s0) = conv.matrix(n0)
    # M_{n0}^{-1} = det^{-1} [[s0, -r0], [-s1, r1]], det = (-1)^{n0}
    sign = 1 if n0 % 2 == 0 else F.neg(1)
    gamma = (q1 * s0 - q0 * s1).scale(sign)
    delta = (q0 * r1 - q1 * r0).scale(sign)
    return gamma, delta


def _normalize_norm(eps: QuadInt) -> QuadInt:
    """把范数为常数 α 的单位化为范数 1"""
    F = eps.ctx.field
    n = eps.norm()
    if not n.coeffs or n.deg > 0:
        raise InternalInvariantViolation(
            "连分数周期给出的元素范数不是非零常数",
            {"element": str(eps), "norm": str(n)},
        )
    alpha = n.lc
    if alpha == 1:
        return eps
    root = F.sqrt(alpha)
    if root is not None:
        return eps.scale(F.inv(root))
    return (eps * eps).scale(F.inv(alpha))


def nontrivial_unit(ctx: QuadContext) -> Tuple[QuadInt, PeriodicExpansion]:
    """由连分数的周期构造范数为 1 的非平凡单位"""
    _require_real(ctx)
    start, s0 = _starting_surd(ctx)
    exp = expand_periodic(start)
    gamma, delta = _period_matrix(exp)
    eps = QuadInt(ctx, gamma * s0 + delta, gamma)
    eps = _normalize_norm(eps)
    if not eps.v.coeffs:
        raise InternalInvariantViolation("得到的单位是常数", {"unit": str(eps)})
    if eps.norm() != Poly.one(ctx.field):
        raise InternalInvariantViolation("单位的范数不等于 1", {"unit": str(eps)})
    bound = unit_bound(ctx)
    if eps.degree > bound:
        logger.warning(f"非平凡单位次数 {eps.degree} 超过理论界 {bound}")
    logger.debug(f"非平凡单位 {eps}, 周期 {exp.T}, 前周期 {exp.n0}")
    return eps, exp


def solve_u_for_v(ctx: QuadContext, v: Poly, d: Poly, max_deg: Optional[int] = None) -> List[Poly]:
    """
    给定 v 求全部 u 使 N(u + Δv) = d
    特征 2 解 u^2 + (b v) u = d + c v^2 (F_2-线性); 奇特征取 u = ±sqrt(d + c v^2)。
    """
    F = ctx.field
    B, C = ctx.min_poly
    if F.p == 2:
        rhs = d + C * v * v
        if max_deg is None:
            degs = [int(p.deg) for p in (B * v, rhs) if p.coeffs]
            max_deg = max([0] + [x for x in degs]) + 1
        return solve_char2_quadratic(B * v, rhs, max_deg)
    root = poly_sqrt(d - C * v * v)
    if root is None:
        return []
    if not root.coeffs:
        return [root]
    return [root, -root]


def _sign_canonical(w: QuadInt) -> QuadInt:
    F = w.ctx.field
    if F.p != 2 and w.u.coeffs and F.neg(w.u.lc) < w.u.lc:
        return w.scale(F.neg(1))
    return w


def fundamental_unit(ctx: QuadContext) -> UnitGroupDescription:
    """
    基本单位 ε0
    非平凡单位 ε = x + Δy 中, 生成元的 v 分量是 y 的因子乘以 F* 中的常数。
    """
    eps, exp = nontrivial_unit(ctx)
    F = ctx.field
    one = Poly.one(F)
    best: Optional[QuadInt] = None
    best_deg: Optional[int] = None
    for y_i in poly_divisors(eps.v):
        for lam in F.nonzero():
            v = y_i.scale(lam)
            for u in solve_u_for_v(ctx, v, one):
                w = QuadInt(ctx, u, v)
                if w.norm() != one:
                    continue
                sd = w.series_degree()
                if sd == 0:
                    continue
                if sd < 0:
                    w, sd = w.conj(), -sd
                if best_deg is None or sd < best_deg or (
                    sd == best_deg and (w.u.sort_key(), w.v.sort_key()) < (best.u.sort_key(), best.v.sort_key())
                ):
                    best, best_deg = w, int(sd)
    if best is None or best_deg is None:
        raise InternalInvariantViolation("因子枚举没有找到任何单位", {"unit": str(eps)})
    best = _sign_canonical(best)
    logger.info(f"基本单位 {best}, 次数 k = {best_deg}")
    return UnitGroupDescription(
        generator=best, degree_k=best_deg, nontrivial=eps, expansion_period=exp.T
    )


def pell_fundamental(D: Poly) -> Tuple[Poly, Poly]:
    """u^2 - D*v^2 = 1 的基本解(奇特征)"""
    F = D.field
    if F.p == 2:
        raise Unsupported("特征 2 下 u^2 + D v^2 不可分, 请使用 b != 0 的单位方程")
    if D.is_constant():
        raise InvalidInput(f"D = {D} 必须是非常数多项式")
    if D.deg % 2 or not F.is_square(D.lc):
        raise InvalidInput(f"D = {D} 必须是偶数次且首项系数为平方")
    if poly_sqrt(D) is not None:
        raise InvalidInput(f"D = {D} 是完全平方")
    ctx = classify(Poly.zero(F), D)
    unit = fundamental_unit(ctx)
    u, v = unit.generator.u, unit.generator.v
    if u * u - D * v * v != Poly.one(F) or not v.coeffs:
        raise InternalInvariantViolation("Pell 解校验失败", {"u": str(u), "v": str(v)})
    bound = F.q ** int(D.deg)
    if max(u.deg, v.deg) > bound:
        raise InternalInvariantViolation(
            f"Pell 解次数 {max(u.deg, v.deg)} 超过界 {bound}", {"u": str(u), "v": str(v)}
        )
    return u, v


__all__ = [
    "UnitGroupDescription",
    "unit_bound",
    "nontrivial_unit",
    "fundamental_unit",
    "pell_fundamental",
    "solve_u_for_v",
]

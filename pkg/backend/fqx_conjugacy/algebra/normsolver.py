"""
范数方程求解模块
求解 N(u + Δv) = d: 特征 2 为 u^2 + b*uv + c*v^2 = d, 奇特征为 u^2 - c*v^2 = d

所有 solve_* 函数都在上下文的规范化坐标中工作; solve_norm 负责坐标的来回变换。
"""
import logging
from dataclasses import dataclass, field as dc_field
from math import lcm
from typing import Iterator, List, Optional, Sequence, Tuple

from .quadring import ImaginaryKind, QuadCase, QuadContext, QuadInt
from .units import UnitGroupDescription, fundamental_unit, solve_u_for_v
from ..arithmetic.poly import (
    NEG_INF,
    Degree,
    Poly,
    poly_divisors,
    poly_sqrt,
    polys_up_to,
)
from ..core.config import settings
from ..exceptions import BudgetExceeded, InternalInvariantViolation, InvalidInput

logger = logging.getLogger(__name__)

Pair = Tuple[Poly, Poly]
# (u 的系数, v 的系数, 模): 要求 模 | coef_u*u + coef_v*v
DivisibilityForm = Tuple[Poly, Poly, Poly]


@dataclass(frozen=True)
class LineFamily:
    """无穷解族 (u0 + du*t, v0 + dv*t), t 取遍 F[x]"""
    u0: Poly
    v0: Poly
    du: Poly
    dv: Poly

    def at(self, t: Poly) -> Pair:
        return self.u0 + self.du * t, self.v0 + self.dv * t

    def instances(self, max_deg: int) -> Iterator[Pair]:
        """deg t <= max_deg 的全部成员"""
        for t in polys_up_to(self.u0.field, max_deg):
            yield self.at(t)

    def __str__(self) -> str:
        return f"u = {self.u0} + ({self.du})t, v = {self.v0} + ({self.dv})t"


@dataclass
class RationalSolutions:
    points: List[Pair] = dc_field(default_factory=list)
    families: List[LineFamily] = dc_field(default_factory=list)


@dataclass
class SolutionFamily:
    """实情形的解集 {ω * ε0^l}"""
    ctx: QuadContext
    d: Poly
    base_solutions: List[QuadInt]
    unit: UnitGroupDescription
    residue_period: int = 1
    divisibility_spec: List[DivisibilityForm] = dc_field(default_factory=list)

    @property
    def generator(self) -> QuadInt:
        return self.unit.generator


def _check_budget(field_q: int, max_deg: Degree) -> None:
    if max_deg == NEG_INF or max_deg < 0:
        return
    size = field_q ** (int(max_deg) + 1)
    if size > settings.ENUMERATION_CEILING:
        raise BudgetExceeded(
            f"枚举 v 的规模 {size} 超过上限 {settings.ENUMERATION_CEILING}",
            size=size,
            ceiling=settings.ENUMERATION_CEILING,
        )


def _coefficient_sqrt(f: Poly) -> Poly:
    """特征 2 下逐系数开方(不改变指数)"""
    F = f.field
    return Poly(F, tuple(F.sqrt(c) for c in f.coeffs))


def _dedupe(pairs: Sequence[Pair]) -> List[Pair]:
    seen = set()
    out = []
    for p in pairs:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return sorted(out, key=lambda uv: (max(uv[0].deg, uv[1].deg), uv[0].sort_key(), uv[1].sort_key()))


# -------------------------------------------------------------------- 有理情形


def _solve_inseparable(ctx: QuadContext, d: Poly) -> RationalSolutions:
    """
    特征 2, b = 0: u^2 + c v^2 = d
    按奇偶拆分 c = c0(x^2) + x c1(x^2), d 同理, 得到 ũ + c0 ṽ = d0, c1 ṽ = d1。
    """
    F = ctx.field
    c0, c1 = ctx.c.split_even_odd()
    d0, d1 = d.split_even_odd()
    out = RationalSolutions()
    if c1.coeffs:
        v_tilde = d1.exact_div(c1)
        if v_tilde is None:
            return out
        u_tilde = d0 + c0 * v_tilde
        u, v = _coefficient_sqrt(u_tilde), _coefficient_sqrt(v_tilde)
        if ctx.norm_form(u, v) == d:
            out.points.append((u, v))
        return out
    # c 是平方: (u + √c v)^2 = d
    if d1.coeffs:
        return out
    root_c = _coefficient_sqrt(c0)
    root_d = _coefficient_sqrt(d0)
    out.families.append(LineFamily(root_d, Poly.zero(F), root_c, Poly.one(F)))
    return out


def solve_rational(ctx: QuadContext, d: Poly) -> RationalSolutions:
    """
    有理情形: N(u + Δv) = (u + ρ1 v)(u + ρ2 v) = d
    d != 0 且两根不同时对 d 的每个分解 L1*L2 解二元线性方程组。
    """
    F = ctx.field
    if F.p == 2 and not ctx.b.coeffs:
        return _solve_inseparable(ctx, d)
    if ctx.case != QuadCase.RATIONAL or ctx.rational_roots is None:
        raise InvalidInput(f"solve_rational 要求有理情形, 当前为 {ctx.describe()}")
    rho1, rho2 = ctx.rational_roots
    out = RationalSolutions()
    zero, one = Poly.zero(F), Poly.one(F)
    if rho1 == rho2:
        # (u + ρ v)^2 = d
        root = poly_sqrt(d)
        if root is None:
            return out
        signs = [root] if F.p == 2 or not root.coeffs else [root, -root]
        for r in signs:
            out.families.append(LineFamily(r, zero, -rho1, one))
        return out
    if not d.coeffs:
        out.families.append(LineFamily(zero, zero, -rho1, one))
        out.families.append(LineFamily(zero, zero, -rho2, one))
        return out
    diff = rho1 - rho2
    points = []
    for L in poly_divisors(d):
        for lam in F.nonzero():
            L1 = L.scale(lam)
            L2 = d // L1
            v = (L1 - L2).exact_div(diff)
            if v is None:
                continue
            u = L1 - rho1 * v
            if ctx.norm_form(u, v) == d:
                points.append((u, v))
    out.points = _dedupe(points)
    return out


# -------------------------------------------------------------------- 虚情形


def imaginary_bounds(ctx: QuadContext, d: Poly) -> Tuple[Degree, Degree]:
    """deg u <= deg d / 2, deg v <= (deg d - deg c) / 2, 各加保护量"""
    guard = settings.IMAGINARY_DEGREE_GUARD
    if not d.coeffs:
        return NEG_INF, NEG_INF
    dd, dc = int(d.deg), int(ctx.c.deg) if ctx.c.coeffs else 0
    v_max = (dd - dc) // 2 + guard
    u_max = dd // 2 + guard
    return u_max, v_max


def iter_imaginary(ctx: QuadContext, d: Poly) -> Iterator[Pair]:
    """虚情形的解, 按 deg v 从低到高产出, 可能重复"""
    if ctx.case != QuadCase.IMAGINARY:
        raise InvalidInput(f"solve_imaginary 要求虚情形, 当前为 {ctx.describe()}")
    F = ctx.field
    if ctx.imaginary_kind == ImaginaryKind.INSEPARABLE:
        yield from _solve_inseparable(ctx, d).points
        return
    if not d.coeffs:
        yield Poly.zero(F), Poly.zero(F)
        return
    u_max, v_max = imaginary_bounds(ctx, d)
    _check_budget(F.q, v_max)
    for v in polys_up_to(F, v_max):
        for u in solve_u_for_v(ctx, v, d, int(max(u_max, 0)) if F.p == 2 else None):
            if ctx.norm_form(u, v) == d:
                yield u, v


def solve_imaginary(ctx: QuadContext, d: Poly) -> List[Pair]:
    """虚情形: 有限解集, 对有界次数的 v 逐个恢复 u"""
    out = _dedupe(list(iter_imaginary(ctx, d)))
    logger.debug(f"虚情形 d={d}: 共 {len(out)} 个解")
    return out


# -------------------------------------------------------------------- 实情形


def real_v_bound(ctx: QuadContext, d: Poly, k: int) -> Degree:
    """deg v <= max(deg d, k) - deg(Δ - Δ')"""
    width = int(ctx.b.deg) if ctx.field.p == 2 else int(ctx.c.deg) // 2
    top = max(int(d.deg) if d.coeffs else 0, k)
    return top - width


def iter_real_base(ctx: QuadContext, d: Poly, unit: UnitGroupDescription) -> Iterator[QuadInt]:
    """按 deg v 从低到高产生 0 <= deg ω <= k-1 的解 ω, 不重复"""
    if not d.coeffs:
        return
    F = ctx.field
    k = unit.degree_k
    v_max = real_v_bound(ctx, d, k)
    _check_budget(F.q, v_max)
    u_max = None
    if F.p == 2:
        u_max = max(int(d.deg), k, int(ctx.b.deg) + max(int(v_max), 0)) + 1
    seen = set()
    for v in polys_up_to(F, v_max):
        for u in solve_u_for_v(ctx, v, d, u_max):
            w = QuadInt(ctx, u, v)
            if w in seen or w.norm() != d:
                continue
            if 0 <= w.series_degree() <= k - 1:
                seen.add(w)
                yield w


def solve_real_base(ctx: QuadContext, d: Poly, unit: Optional[UnitGroupDescription] = None) -> SolutionFamily:
    """实情形: 0 <= deg ω <= k-1 的全部解 ω"""
    if ctx.case != QuadCase.REAL:
        raise InvalidInput(f"solve_real_base 要求实情形, 当前为 {ctx.describe()}")
    unit = unit or fundamental_unit(ctx)
    base = sorted(iter_real_base(ctx, d, unit), key=lambda w: (w.series_degree(), w.u.sort_key(), w.v.sort_key()))
    logger.debug(f"实情形 d={d}: k={unit.degree_k}, {len(base)} 个基本解")
    return SolutionFamily(ctx=ctx, d=d, base_solutions=base, unit=unit)


def _residue_cycle(unit: QuadInt, modulus: Poly) -> List[Pair]:
    """ε^n 的系数对 (x_n, y_n) 模 P, n = 0, ..., 一个完整周期"""
    F = modulus.field
    P = modulus
    B, C = unit.ctx.min_poly
    ex, ey = unit.u % P, unit.v % P
    start = (Poly.one(F) % P, Poly.zero(F))
    states = [start]
    hard = F.q ** (2 * int(P.deg))
    while True:
        x, y = states[-1]
        state = ((x * ex - C * y * ey) % P, (x * ey + y * ex - B * y * ey) % P)
        if state == start:
            return states
        states.append(state)
        if len(states) > hard:
            raise InternalInvariantViolation(
                f"余数序列在 {hard} 步内没有回到起点",
                {"unit": str(unit), "modulus": str(P)},
            )


def residue_period(unit: QuadInt, forms: Sequence[Tuple[Poly, Poly]], modulus: Poly) -> int:
    """
    线性型 P1*x_n + P2*y_n 模 P 的最小公共周期, ε^n = x_n + Δy_n
    ε 模 P 可逆, 所以 (x_n, y_n) 模 P 是纯周期的, 其周期 n 是每个线性型周期的倍数;
    在 n 的因子中取最小的公共周期。forms 为空时返回系数对本身的周期。
    """
    if not modulus.coeffs:
        raise InvalidInput("模不能为零多项式")
    states = _residue_cycle(unit, modulus)
    n = len(states)
    soft = modulus.field.q ** int(modulus.deg)
    if n > soft:
        logger.warning(f"余数周期 {n} 超过 q^deg P = {soft}")
    if not forms:
        return n
    series = [[(P1 * x + P2 * y) % modulus for x, y in states] for P1, P2 in forms]
    for T in range(1, n + 1):
        if n % T:
            continue
        if all(seq[i] == seq[i - T] for seq in series for i in range(T, n)):
            return T
    return n


def tracked_forms(omega: QuadInt, forms: Sequence[DivisibilityForm]) -> List[Tuple[Poly, Poly, Poly]]:
    """
    把 cu*u + cv*v 在 ω*ε^n 上的取值写成 (x_n, y_n) 的线性型
    (a + Δb)(x + Δy) = (a*x - C*b*y) + Δ(b*x + (a - B*b)*y)
    """
    B, C = omega.ctx.min_poly
    a, b = omega.u, omega.v
    return [(cu * a + cv * b, cv * (a - B * b) - cu * C * b, m) for cu, cv, m in forms]


def _omega_period(omega: QuadInt, generator: QuadInt, forms: Sequence[DivisibilityForm]) -> int:
    periods = [residue_period(generator, [(P1, P2)], m) for P1, P2, m in tracked_forms(omega, forms)]
    return lcm(*periods) if periods else 1


def _passes(w: QuadInt, d: Poly, forms: Sequence[DivisibilityForm]) -> bool:
    if not all(m.divides(cu * w.u + cv * w.v) for cu, cv, m in forms):
        return False
    if w.norm() != d:
        raise InternalInvariantViolation("筛选出的元素范数不等于 d", {"element": str(w)})
    return True


def iter_filtered(ctx: QuadContext, d: Poly, forms: Sequence[DivisibilityForm],
                  unit: Optional[UnitGroupDescription] = None) -> Iterator[QuadInt]:
    """
    边枚举基本解边筛选 ω*ε0^l (l < T_ω), 找到即产出
    T_ω 是 ω 对应线性型的公共周期
    """
    if ctx.case != QuadCase.REAL:
        raise InvalidInput(f"iter_filtered 要求实情形, 当前为 {ctx.describe()}")
    unit = unit or fundamental_unit(ctx)
    for omega in iter_real_base(ctx, d, unit):
        w = omega
        for _ in range(_omega_period(omega, unit.generator, forms)):
            if _passes(w, d, forms):
                yield w
            w = w * unit.generator


def filtered_solutions(fam: SolutionFamily, forms: Sequence[DivisibilityForm]) -> List[QuadInt]:
    """在 ω * ε0^l (l < T0) 中筛选满足全部整除条件的成员"""
    fam.divisibility_spec = list(forms)
    periods = []
    survivors = []
    for omega in fam.base_solutions:
        T = _omega_period(omega, fam.generator, forms)
        periods.append(T)
        w = omega
        for _ in range(T):
            if _passes(w, fam.d, forms):
                survivors.append(w)
            w = w * fam.generator
    fam.residue_period = lcm(*periods) if periods else 1
    logger.debug(f"T0 = {fam.residue_period}, {len(survivors)} 个元素通过整除筛选")
    return survivors


# -------------------------------------------------------------------- 统一入口


@dataclass
class NormSolutionReport:
    """solve_norm 的结果, 解均为原始坐标"""
    ctx: QuadContext
    d: Poly
    solutions: List[Pair] = dc_field(default_factory=list)
    families: List[LineFamily] = dc_field(default_factory=list)
    real_family: Optional[SolutionFamily] = None

    @property
    def case(self) -> QuadCase:
        return self.ctx.case

    @property
    def solvable(self) -> bool:
        if self.solutions or self.families:
            return True
        return self.real_family is not None and bool(self.real_family.base_solutions)


def solve_norm(ctx: QuadContext, d: Poly, family_degree: int = 2) -> NormSolutionReport:
    """
    求解原始二次型 a*u^2 + b*uv + c*v^2 = d
    规范化坐标中的解映射回原始坐标, 不满足整除性的丢弃。
    """
    F = ctx.field
    d_n = ctx.transform.normalize_rhs(d)
    report = NormSolutionReport(ctx=ctx, d=d)
    normalized: List[Pair] = []
    if ctx.case == QuadCase.REAL:
        if not d_n.coeffs:
            normalized.append((Poly.zero(F), Poly.zero(F)))
        else:
            fam = solve_real_base(ctx, d_n)
            report.real_family = fam
            normalized.extend((w.u, w.v) for w in fam.base_solutions)
    elif ctx.case == QuadCase.IMAGINARY:
        normalized.extend(solve_imaginary(ctx, d_n))
    else:
        rational = solve_rational(ctx, d_n)
        normalized.extend(rational.points)
        report.families = rational.families
        for family in rational.families:
            normalized.extend(family.instances(family_degree))
    for u_n, v in normalized:
        mapped = ctx.transform.to_original(u_n, v)
        if mapped is None:
            continue
        u, v = mapped
        if ctx.original_form(u, v) != d:
            raise InternalInvariantViolation(
                "映射回原始坐标后不满足方程", {"u": str(u), "v": str(v), "d": str(d)}
            )
        report.solutions.append((u, v))
    report.solutions = _dedupe(report.solutions)
    return report


__all__ = [
    "LineFamily",
    "RationalSolutions",
    "SolutionFamily",
    "NormSolutionReport",
    "DivisibilityForm",
    "solve_rational",
    "solve_imaginary",
    "iter_imaginary",
    "solve_real_base",
    "iter_real_base",
    "residue_period",
    "filtered_solutions",
    "iter_filtered",
    "tracked_forms",
    "solve_norm",
    "imaginary_bounds",
    "real_v_bound",
]

"""
连分数模块
二次无理数 a*t^2 + b*t + c = 0 在 F((1/x)) 中的连分数展开:
精确的方程状态、根的分支选择、约化判定、周期检测与渐近分式
"""
import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from ..arithmetic.gf import FieldSpec
from ..arithmetic.laurent import (
    LaurentSeries,
    default_precision,
    first_difference,
    quadratic_roots,
    with_precision,
)
from ..arithmetic.poly import Poly
from ..core.config import settings
from ..exceptions import (
    InternalInvariantViolation,
    InvalidInput,
    PrecisionExhausted,
    RationalCase,
)

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[Poly, Poly], Tuple[Poly, Poly]]


def _sign_normalize(a: Poly, b: Poly, c: Poly) -> Tuple[Poly, Poly, Poly]:
    """奇特征下 (a, b, c) 与 (-a, -b, -c) 取首项编码较小的一个"""
    F = a.field
    if F.p != 2 and F.neg(a.lc) < a.lc:
        return -a, -b, -c
    return a, b, c


def triple_roots(a: Poly, b: Poly, c: Poly, prec: int) -> Tuple[LaurentSeries, LaurentSeries]:
    """a*t^2 + b*t + c = 0 的两个级数根: 先解 s^2 + b*s + a*c = 0, 再除以 a"""
    try:
        roots = quadratic_roots(b, a * c, prec)
    except RationalCase as e:
        raise InvalidInput(f"方程 ({a})t^2+({b})t+({c}) 有有理根 {e.root}") from e
    if roots is None:
        raise InvalidInput(f"方程 ({a})t^2+({b})t+({c}) 没有级数根")
    inv_a = LaurentSeries.from_poly(a).inverse(prec)
    return roots[0] * inv_a, roots[1] * inv_a


def _branch_tag(branch: LaurentSeries, other: LaurentSeries) -> Tuple:
    if branch.degree != other.degree:
        return ("deg", int(branch.degree))
    e = first_difference(branch, other)
    if e is None:
        raise PrecisionExhausted("两个根在已知精度内无法区分")
    return ("head",) + tuple(branch.coeff(i) for i in range(int(branch.degree), e - 1, -1))


@dataclass(frozen=True)
class Surd:
    """
    二次无理数: 方程 a*t^2 + b*t + c = 0 的一个根
    branch 是所选根的截断展开, other 是另一个根。
    """
    a: Poly
    b: Poly
    c: Poly
    branch: LaurentSeries
    other: LaurentSeries
    tag: Tuple = dc_field(default=())

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    @property
    def triple(self) -> Tuple[Poly, Poly, Poly]:
        return self.a, self.b, self.c

    @property
    def key(self) -> Tuple:
        return (self.a, self.b, self.c, self.tag)

    @property
    def discriminant(self) -> Poly:
        F = self.field
        if F.p == 2:
            return self.b
        return self.b * self.b - (self.a * self.c).scale(F.add(F.add(1, 1), F.add(1, 1)))

    @classmethod
    def _build(
        cls, a: Poly, b: Poly, c: Poly, branch: LaurentSeries, other: LaurentSeries
    ) -> "Surd":
        a, b, c = _sign_normalize(a, b, c)
        return cls(a, b, c, branch, other, _branch_tag(branch, other))

    @classmethod
    def matching(cls, a: Poly, b: Poly, c: Poly, target: LaurentSeries, prec: int) -> "Surd":
        """选取与 target 一致的根"""
        if not a.coeffs:
            raise InvalidInput("surd 的首项系数不能为零")
        r1, r2 = triple_roots(a, b, c, prec)
        ok1 = first_difference(r1, target) is None
        ok2 = first_difference(r2, target) is None
        if ok1 and ok2:
            raise PrecisionExhausted("目标级数精度不足以区分两个根")
        if not ok1 and not ok2:
            raise InternalInvariantViolation(
                "两个根都不匹配目标级数",
                {"triple": [str(a), str(b), str(c)], "target": str(target)},
            )
        return cls._build(a, b, c, r1, r2) if ok1 else cls._build(a, b, c, r2, r1)

    @classmethod
    def by_degree(cls, a: Poly, b: Poly, c: Poly, positive: bool, prec: int) -> "Surd":
        """选取次数为正(或非正)的根; 两根都满足时取第一个"""
        r1, r2 = triple_roots(a, b, c, prec)
        first_ok = (r1.degree > 0) == positive
        if first_ok:
            return cls._build(a, b, c, r1, r2)
        return cls._build(a, b, c, r2, r1)

    def is_reduced(self) -> bool:
        """deg ρ > 0 且 deg ρ' < 0"""
        return self.branch.degree > 0 and self.other.degree < 0

    def in_bounded_set(self) -> bool:
        """约化状态满足的次数界"""
        if self.field.p == 2:
            m = self.b.deg
            return self.a.deg < m and self.c.deg < m
        half = self.discriminant.deg / 2
        return all(p.deg <= half for p in self.triple)

    def __str__(self) -> str:
        return f"({self.a})t^2+({self.b})t+({self.c}) ~ {self.branch}"


def cf_step(s: Surd, prec: Optional[int] = None) -> Tuple[Poly, Surd]:
    """
    连分数的一步: A = ρ 的多项式部分, ρ_next = 1/(ρ - A)
    新方程 (a*A^2 + b*A + c) t^2 + (2aA + b) t + a = 0。
    """
    prec = prec or default_precision(*s.triple)
    A = s.branch.polynomial_part()
    a, b, c = s.triple
    F = s.field
    a_next = a * A * A + b * A + c
    if not a_next.coeffs:
        raise InvalidInput(f"{s} 是有理元素 {A}")
    b_next = (a * A).scale(F.add(1, 1)) + b
    target = (s.branch - LaurentSeries.from_poly(A)).inverse()
    nxt = Surd.matching(a_next, b_next, a, target, prec)
    if s.is_reduced() and not nxt.in_bounded_set():
        raise InternalInvariantViolation(
            "连分数状态越出有界集合",
            {"state": str(nxt), "A": str(A)},
        )
    logger.debug(f"cf_step: A = {A}, 新状态 ({nxt.a}, {nxt.b}, {nxt.c})")
    return A, nxt


@dataclass
class Convergents:
    """渐近分式 P_n / Q_n, 内部从 n = -1 开始存储"""
    field: FieldSpec
    partial_quotients: List[Poly] = dc_field(default_factory=list)
    _P: List[Poly] = dc_field(default_factory=list)
    _Q: List[Poly] = dc_field(default_factory=list)

    def __post_init__(self) -> None:
        if not self._P:
            F = self.field
            self._P = [Poly.zero(F), Poly.one(F)]
            self._Q = [Poly.one(F), Poly.zero(F)]
            quotients, self.partial_quotients = self.partial_quotients, []
            for A in quotients:
                self.push(A)

    def push(self, A: Poly) -> None:
        self.partial_quotients.append(A)
        self._P.append(self._P[-1] * A + self._P[-2])
        self._Q.append(self._Q[-1] * A + self._Q[-2])

    def P(self, n: int) -> Poly:
        return self._P[n + 1]

    def Q(self, n: int) -> Poly:
        return self._Q[n + 1]

    @property
    def length(self) -> int:
        return len(self.partial_quotients)

    def matrix(self, n: int) -> Matrix:
        """M_n = [[P_n, P_{n-1}], [Q_n, Q_{n-1}]], det M_n = (-1)^n"""
        return ((self.P(n), self.P(n - 1)), (self.Q(n), self.Q(n - 1)))

    def determinant(self, n: int) -> Poly:
        return self.P(n) * self.Q(n - 1) - self.P(n - 1) * self.Q(n)

    def check_identity(self) -> bool:
        F = self.field
        for n in range(0, self.length + 1):
            expected = Poly.one(F) if n % 2 == 0 else Poly.const(F, F.neg(1))
            if self.determinant(n) != expected:
                return False
        return True


@dataclass(frozen=True)
class PeriodicExpansion:
    """周期展开的结果"""
    start: Surd
    preperiod: List[Poly]
    period: List[Poly]
    convergents: Convergents
    bound: int
    states: List[Surd]

    @property
    def T(self) -> int:
        return len(self.period)

    @property
    def n0(self) -> int:
        return len(self.preperiod)


def period_bound(s: Surd) -> int:
    """特征 2: q^(2m), m = deg b; 奇特征: q^(3δ), δ = deg(判别式)/2"""
    F = s.field
    if F.p == 2:
        return F.q ** (2 * int(s.b.deg))
    delta = -(-int(s.discriminant.deg) // 2)
    return F.q ** (3 * delta)


def _expand(s: Surd, bound: int, prec: int) -> PeriodicExpansion:
    cap = settings.CF_BOUND_MULTIPLIER * bound
    seen: Dict[Tuple, int] = {s.key: 0}
    states = [s]
    conv = Convergents(s.field)
    # 起点按当前精度重新展开
    current = Surd.matching(s.a, s.b, s.c, s.branch, prec)
    n = 0
    while True:
        A, current = cf_step(current, prec)
        conv.push(A)
        n += 1
        if current.key in seen:
            n0 = seen[current.key]
            break
        if n > cap:
            raise InternalInvariantViolation(
                f"连分数在 {cap} 步内没有出现周期",
                {"start": str(s), "bound": bound},
            )
        seen[current.key] = n
        states.append(current)
    quotients = conv.partial_quotients
    return PeriodicExpansion(
        start=s,
        preperiod=quotients[:n0],
        period=quotients[n0:],
        convergents=conv,
        bound=bound,
        states=states,
    )


def expand_periodic(s: Surd, bound: Optional[int] = None) -> PeriodicExpansion:
    """
    展开直到状态重复
    周期长度超过理论界时记录警告, 超过 CF_BOUND_MULTIPLIER 倍则视为理论被违反。
    """
    bound = bound or period_bound(s)
    result = with_precision(lambda prec: _expand(s, bound, prec), default_precision(*s.triple))
    if result.T > bound:
        logger.warning(f"连分数周期 {result.T} 超过理论界 {bound}")
    if s.field.p == 2 and s.is_reduced() and result.preperiod:
        raise InternalInvariantViolation(
            "约化元素的连分数不是纯周期的",
            {"start": str(s), "preperiod": [str(A) for A in result.preperiod]},
        )
    if not result.convergents.check_identity():
        raise InternalInvariantViolation("渐近分式行列式恒等式不成立", {"start": str(s)})
    logger.debug(f"连分数展开: 前周期 {result.n0}, 周期 {result.T}, 界 {bound}")
    return result


def is_reduced(s: Surd) -> bool:
    return s.is_reduced()


__all__ = [
    "Surd",
    "Convergents",
    "PeriodicExpansion",
    "cf_step",
    "expand_periodic",
    "is_reduced",
    "period_bound",
    "triple_roots",
]

"""
Laurent 级数模块
F_q((1/x)) 中按 x 降幂展开的截断级数, 以及二次方程级数根的逐项剥离

级数只用于选根和截取多项式部分, 所有需要证明的量都回到多项式中精确重算。
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, TypeVar, Union

from .gf import FieldSpec
from .poly import NEG_INF, Degree, Poly
from ..core.config import settings
from ..exceptions import DivisionByZero, InvalidInput, PrecisionExhausted, RationalCase

logger = logging.getLogger(__name__)

T = TypeVar("T")

# 精确多项式求逆时的默认保留长度
DEFAULT_INVERSE_PRECISION = 32


def _strip(low: int, coeffs: List[int]) -> Tuple[int, Tuple[int, ...]]:
    start, end = 0, len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    while start < end and coeffs[start] == 0:
        start += 1
    if start == end:
        return 0, ()
    return low + start, tuple(coeffs[start:end])


@dataclass(frozen=True)
class LaurentSeries:
    """
    截断 Laurent 级数
    coeffs[i] 是 x^(low+i) 的系数; 指数 >= floor 的系数全部已知,
    floor 为 NEG_INF 时级数是精确的(有限项)。
    """
    field: FieldSpec
    low: int
    coeffs: Tuple[int, ...]
    floor: Degree = NEG_INF

    def __post_init__(self) -> None:
        floor = self.floor
        coeffs = list(self.coeffs)
        low = self.low
        if floor != NEG_INF and low < floor:
            cut = int(floor) - low
            coeffs = coeffs[cut:]
            low = int(floor)
        low, stripped = _strip(low, coeffs)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", stripped)

    # ---------------------------------------------------------------- 构造
    @classmethod
    def from_poly(cls, f: Poly) -> "LaurentSeries":
        return cls(f.field, 0, f.coeffs)

    @classmethod
    def monomial(cls, field: FieldSpec, c: int, e: int) -> "LaurentSeries":
        return cls(field, e, (c,))

    @classmethod
    def zero(cls, field: FieldSpec, floor: Degree = NEG_INF) -> "LaurentSeries":
        return cls(field, 0, (), floor)

    @classmethod
    def from_terms(cls, field: FieldSpec, terms: Dict[int, int], floor: Degree) -> "LaurentSeries":
        if not terms:
            return cls(field, 0, (), floor)
        low, high = min(terms), max(terms)
        return cls(field, low, tuple(terms.get(e, 0) for e in range(low, high + 1)), floor)

    # ---------------------------------------------------------------- 属性
    @property
    def is_exact(self) -> bool:
        return self.floor == NEG_INF

    @property
    def top(self) -> Degree:
        """首项次数; 零级数为 NEG_INF"""
        return self.low + len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def degree(self) -> Degree:
        """级数次数, 精度不足以确定时抛出 PrecisionExhausted"""
        if not self.coeffs and not self.is_exact:
            raise PrecisionExhausted(f"截断零级数的次数未知(已知到 x^{self.floor})")
        return self.top

    @property
    def prec(self) -> Degree:
        """从首项往下已知的系数个数"""
        if self.is_exact:
            return float("inf")
        return self._upper() - self.floor + 1

    @property
    def window(self) -> Tuple[int, ...]:
        """从首项到 floor 的系数(降幂)"""
        if not self.coeffs:
            return ()
        bottom = self.low if self.is_exact else int(self.floor)
        return tuple(self.coeff(e) for e in range(int(self.top), bottom - 1, -1))

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, e: int) -> int:
        if not self.is_exact and e < self.floor:
            raise PrecisionExhausted(f"x^{e} 的系数超出已知精度", needed=int(self.floor) - e)
        i = e - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        """精确为零"""
        return not self.coeffs and self.is_exact

    def _upper(self) -> Degree:
        # 截断零级数的真实次数 < floor
        if self.coeffs:
            return self.top
        return self.floor - 1 if not self.is_exact else NEG_INF

    def terms(self) -> Dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    # ---------------------------------------------------------------- 运算
    def _check(self, other: "LaurentSeries") -> None:
        if other.field != self.field:
            raise InvalidInput("级数不属于同一个域")

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        F = self.field
        terms = self.terms()
        for e, c in other.terms().items():
            terms[e] = F.add(terms.get(e, 0), c)
        return LaurentSeries.from_terms(F, terms, max(self.floor, other.floor))

    def __neg__(self) -> "LaurentSeries":
        F = self.field
        return LaurentSeries(F, self.low, tuple(F.neg(c) for c in self.coeffs), self.floor)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, c: int) -> "LaurentSeries":
        F = self.field
        return LaurentSeries(F, self.low, tuple(F.mul(c, a) for a in self.coeffs), self.floor)

    def shift(self, n: int) -> "LaurentSeries":
        """乘以 x^n"""
        return LaurentSeries(self.field, self.low + n, self.coeffs, self.floor + n)

    def __mul__(self, other: Union["LaurentSeries", Poly]) -> "LaurentSeries":
        if isinstance(other, Poly):
            other = LaurentSeries.from_poly(other)
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(F)
        floor = max(self.floor + other._upper(), other.floor + self._upper())
        terms: Dict[int, int] = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            ea = self.low + i
            for j, b in enumerate(other.coeffs):
                e = ea + other.low + j
                if b and e >= floor:
                    terms[e] = F.add(terms.get(e, 0), F.mul(a, b))
        return LaurentSeries.from_terms(F, terms, floor)

    def inverse(self, prec: Optional[int] = None) -> "LaurentSeries":
        """
        求逆
        精确单项式的逆是精确的; 其余情形保留与自身相同的相对精度
        (精确多项式默认保留 DEFAULT_INVERSE_PRECISION 项)。
        """
        F = self.field
        if not self.coeffs:
            if self.is_exact:
                raise DivisionByZero("对零级数求逆")
            raise PrecisionExhausted("截断零级数无法求逆", needed=1)
        d = int(self.top)
        inv_lc = F.inv(self.lc)
        if self.is_exact and len(self.coeffs) == 1:
            return LaurentSeries.monomial(F, inv_lc, -d)
        if self.is_exact:
            n_terms = prec or DEFAULT_INVERSE_PRECISION
        else:
            n_terms = int(self.prec)
            if prec is not None:
                n_terms = min(n_terms, prec)
        w = [0] * n_terms
        w[0] = inv_lc
        for n in range(1, n_terms):
            s = 0
            for i in range(1, n + 1):
                si = self.coeff(d - i)
                if si:
                    s = F.add(s, F.mul(si, w[n - i]))
            w[n] = F.neg(F.mul(inv_lc, s))
        terms = {-d - n: c for n, c in enumerate(w) if c}
        return LaurentSeries.from_terms(F, terms, -d - n_terms + 1)

    def truncate(self, floor: int) -> "LaurentSeries":
        """丢弃 x^floor 以下的项"""
        return LaurentSeries(self.field, self.low, self.coeffs, max(self.floor, floor))

    def polynomial_part(self) -> Poly:
        """次数 >= 0 的部分"""
        if self.floor > 0:
            raise PrecisionExhausted(
                f"截取多项式部分需要已知到 x^0, 当前只到 x^{self.floor}",
                needed=int(self.floor),
            )
        return Poly(self.field, tuple(self.coeff(e) for e in range(0, int(self._upper()) + 1)))

    def __str__(self) -> str:
        F = self.field
        parts = []
        for e in sorted(self.terms(), reverse=True):
            c = F.format(self.coeff(e))
            if F.is_compound(self.coeff(e)):
                c = f"({c})"
            parts.append(f"{c}*x^{e}")
        if not self.is_exact:
            parts.append(f"O(x^{int(self.floor) - 1})")
        return " + ".join(parts) if parts else "0"


def first_difference(s: LaurentSeries, t: LaurentSeries) -> Optional[int]:
    """两个级数在公共已知范围内第一个(最高)不同的指数; 范围内一致时返回 None"""
    floor = max(s.floor, t.floor)
    top = max(s._upper(), t._upper())
    if top == NEG_INF:
        return None
    e = int(top)
    while e >= floor:
        if s.coeff(e) != t.coeff(e):
            return e
        e -= 1
    return None


# -------------------------------------------------------------------- 二次方程的根


def default_precision(*polys: Poly) -> int:
    degs = [int(p.deg) for p in polys if p.coeffs]
    base = 4 * max(degs + [0]) + 8
    return max(base, settings.LAURENT_MIN_PRECISION)


def with_precision(compute: Callable[[int], T], prec: int) -> T:
    """精度不足时加倍重试, 直到 LAURENT_PRECISION_CAP"""
    cap = max(settings.LAURENT_PRECISION_CAP, prec)
    while True:
        try:
            return compute(prec)
        except PrecisionExhausted as e:
            if prec >= cap:
                raise PrecisionExhausted(f"精度已达上限 {cap}: {e.message}", needed=cap) from e
            prec = min(2 * prec, cap)
            logger.debug(f"精度不足, 提升到 {prec}")


def _peel_term(B: LaurentSeries, C: LaurentSeries) -> Optional[Tuple[int, int]]:
    """t^2 + B t + C = 0 的下一项 (次数, 系数); 无根时返回 None"""
    F = B.field
    n = int(C.top)
    c_top = C.lc
    if B.is_zero():
        root = F.sqrt(F.neg(c_top))
        if n % 2 or root is None:
            return None
        return n // 2, root
    m = int(B.top)
    b_top = B.lc
    if n < 2 * m:
        return n - m, F.neg(F.div(c_top, b_top))
    if n > 2 * m:
        root = F.sqrt(F.neg(c_top))
        if n % 2 or root is None:
            return None
        return n // 2, root
    for t0 in F.nonzero():
        if F.add(F.add(F.mul(t0, t0), F.mul(b_top, t0)), c_top) == 0:
            return m, t0
    return None


def _peel_root(B: LaurentSeries, C: LaurentSeries, prec: int) -> Optional[LaurentSeries]:
    """
    逐项剥离 t^2 + B t + C = 0 的一个级数根, 保留 prec 项
    每确定一项 tau 就把方程换成 t' = t - tau 的方程。
    """
    F = B.field
    terms: Dict[int, int] = {}
    target: Optional[int] = None
    while True:
        if C.is_zero():
            root = LaurentSeries.from_terms(F, terms, NEG_INF)
            exponents = list(terms)
            if all(e >= 0 for e in exponents):
                raise RationalCase(Poly(F, tuple(terms.get(i, 0) for i in range(max(exponents + [-1]) + 1))))
            raise RationalCase(root)
        step = _peel_term(B, C)
        if step is None:
            return None
        d, t0 = step
        if target is None:
            target = d - prec + 1
        if d < target:
            break
        terms[d] = t0
        tau = LaurentSeries.monomial(F, t0, d)
        C = tau * tau + B * tau + C
        B = B + tau + tau
    return LaurentSeries.from_terms(F, terms, target)


def quadratic_roots(
    B: Poly, C: Poly, prec: Optional[int] = None
) -> Optional[Tuple[LaurentSeries, LaurentSeries]]:
    """
    t^2 + B t + C = 0 的两个级数根 (r, -B - r)
    无根(虚情形)返回 None; 有多项式根时抛出 RationalCase。
    """
    prec = prec or default_precision(B, C)
    Bs, Cs = LaurentSeries.from_poly(B), LaurentSeries.from_poly(C)
    root = _peel_root(Bs, Cs, prec)
    if root is None:
        return None
    other = -Bs - root
    return root, other


def quadratic_series_root(b: Poly, c: Poly, prec: Optional[int] = None) -> Optional[LaurentSeries]:
    """
    二次方程的级数根
    特征 2 (b != 0): t^2 + b t + c = 0; 奇特征 (b = 0): t^2 = c。
    """
    F = b.field
    if F.p == 2:
        if not b.coeffs:
            raise InvalidInput("特征 2 下要求 b != 0")
        roots = quadratic_roots(b, c, prec)
    else:
        if b.coeffs:
            raise InvalidInput("奇特征下要求 b = 0 (方程 t^2 = c)")
        roots = quadratic_roots(b, -c, prec)
    if roots is None:
        return None
    return roots[0]


__all__ = [
    "LaurentSeries",
    "first_difference",
    "default_precision",
    "with_precision",
    "quadratic_roots",
    "quadratic_series_root",
    "DEFAULT_INVERSE_PRECISION",
]

"""
二次扩环模块
R = F[x][Δ], Δ^2 + BΔ + C = 0 的元素 u + Δv, 范数、共轭、虚情形的 Deg,
以及实/虚/有理三分类与变量替换

特征 2: (B, C) = (b, c), 范数 u^2 + b*uv + c*v^2;
奇特征: 先配方化为 b = 0, Δ^2 = c, 范数 u^2 - c*v^2。
"""
import logging
from dataclasses import dataclass, field as dc_field, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from ..arithmetic.gf import FieldSpec
from ..arithmetic.laurent import LaurentSeries, default_precision, quadratic_roots, with_precision
from ..arithmetic.poly import NEG_INF, Degree, Poly, poly_sqrt
from ..exceptions import InvalidInput, RationalCase

logger = logging.getLogger(__name__)


class QuadCase(str, Enum):
    """二次方程的三种情形"""
    RATIONAL = "Rational"
    REAL = "Real"
    IMAGINARY = "Imaginary"


class ImaginaryKind(str, Enum):
    ODD_DEGREE = "odd-degree"              # deg c 为奇数且 > 2 deg b
    UNSOLVABLE_LEADING = "unsolvable-leading"  # 首项方程在 F 中无解 / 首项系数非平方
    INSEPARABLE = "inseparable"            # 特征 2 且 b = 0, c 不是平方


@dataclass(frozen=True)
class ContextTransform:
    """
    规范化坐标与原始坐标之间的替换
    原始 u = (u_n + shift*v) / scale, 规范化 u_n = scale*u - shift*v, v 不变。
    """
    scale: Poly
    shift: Poly

    def to_original(self, u_n: Poly, v: Poly) -> Optional[Tuple[Poly, Poly]]:
        """映射回原始坐标; scale 不整除分子时返回 None"""
        u = (u_n + self.shift * v).exact_div(self.scale)
        if u is None:
            return None
        return u, v

    def to_normalized(self, u: Poly, v: Poly) -> Tuple[Poly, Poly]:
        return self.scale * u - self.shift * v, v

    def normalize_rhs(self, d: Poly) -> Poly:
        return self.scale * d


@dataclass(frozen=True)
class QuadContext:
    """二次环的上下文: 规范化后的 (b, c), 情形标签与坐标变换"""
    field: FieldSpec
    b: Poly
    c: Poly
    case: QuadCase
    transform: ContextTransform
    form: Tuple[Poly, Poly, Poly]
    rational_roots: Optional[Tuple[Poly, Poly]] = None
    imaginary_kind: Optional[ImaginaryKind] = None
    shifts: Tuple[str, ...] = dc_field(default=())

    # ---------------------------------------------------------------- 构造
    @classmethod
    def from_form(cls, a: Poly, b: Poly, c: Poly) -> "QuadContext":
        """
        由二次型 a*u^2 + b*uv + c*v^2 构造上下文
        先乘以 a 化为首一 (u1 = a*u), 奇特征再配方, 最后分类。
        """
        F = a.field
        if not a.coeffs:
            raise InvalidInput("二次型的首项系数 a 不能为零")
        ac = a * c
        if F.p == 2:
            ctx = classify(b, ac)
            return cls(
                field=F,
                b=ctx.b,
                c=ctx.c,
                case=ctx.case,
                transform=ContextTransform(scale=a, shift=ctx.transform.shift),
                form=(a, b, c),
                rational_roots=ctx.rational_roots,
                imaginary_kind=ctx.imaginary_kind,
                shifts=ctx.shifts,
            )
        half_b = b.scale(F.inv(F.add(1, 1)))
        c_pell = half_b * half_b - ac
        ctx = classify(Poly.zero(F), c_pell)
        return cls(
            field=F,
            b=ctx.b,
            c=ctx.c,
            case=ctx.case,
            transform=ContextTransform(scale=a, shift=-half_b),
            form=(a, b, c),
            rational_roots=ctx.rational_roots,
            imaginary_kind=ctx.imaginary_kind,
            shifts=("complete-square",),
        )

    # ---------------------------------------------------------------- 性质
    @property
    def characteristic(self) -> int:
        return self.field.p

    @property
    def min_poly(self) -> Tuple[Poly, Poly]:
        """Δ 的极小多项式 t^2 + B t + C 的 (B, C)"""
        if self.field.p == 2:
            return self.b, self.c
        return self.b, -self.c

    @property
    def inseparable(self) -> bool:
        return self.imaginary_kind == ImaginaryKind.INSEPARABLE or (
            self.field.p == 2 and not self.b.coeffs
        )

    def norm_form(self, u: Poly, v: Poly) -> Poly:
        """N(u + Δv) = u^2 - B*uv + C*v^2"""
        B, C = self.min_poly
        return u * u - B * u * v + C * v * v

    def original_form(self, u: Poly, v: Poly) -> Poly:
        a, b, c = self.form
        return a * u * u + b * u * v + c * v * v

    def element(self, u: Poly, v: Poly) -> "QuadInt":
        return QuadInt(self, u, v)

    def one(self) -> "QuadInt":
        F = self.field
        return QuadInt(self, Poly.one(F), Poly.zero(F))

    def delta_series(self, prec: Optional[int] = None) -> LaurentSeries:
        """Δ 在 F((1/x)) 中固定的嵌入(实情形)"""
        if self.case != QuadCase.REAL:
            raise InvalidInput(f"{self.case.value} 情形没有 Δ 的级数嵌入")
        B, C = self.min_poly
        return _delta_series(B, C, prec or default_precision(B, C))

    def series_degree(self, u: Poly, v: Poly) -> Degree:
        """u + Δv 作为级数的次数, 精度不足时自动加倍"""
        if not u.coeffs and not v.coeffs:
            return NEG_INF
        if not v.coeffs:
            return u.deg

        def compute(prec: int) -> Degree:
            s = LaurentSeries.from_poly(u) + self.delta_series(prec) * v
            return s.degree

        return with_precision(compute, default_precision(self.b, self.c, u, v))

    def describe(self) -> str:
        text = f"{self.case.value}: t^2+({self.min_poly[0]})t+({self.min_poly[1]})"
        if self.imaginary_kind is not None:
            text += f" [{self.imaginary_kind.value}]"
        return text


@lru_cache(maxsize=256)
def _delta_series(B: Poly, C: Poly, prec: int) -> LaurentSeries:
    roots = quadratic_roots(B, C, prec)
    if roots is None:
        raise InvalidInput("方程没有级数根")
    return roots[0]


@dataclass(frozen=True)
class QuadInt:
    """R 中的元素 u + Δv"""
    ctx: QuadContext
    u: Poly
    v: Poly

    def _check(self, other: "QuadInt") -> None:
        if other.ctx.min_poly != self.ctx.min_poly:
            raise InvalidInput("元素不属于同一个二次环")

    def __add__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.ctx, self.u + other.u, self.v + other.v)

    def __mul__(self, other: Union["QuadInt", Poly]) -> "QuadInt":
        if isinstance(other, Poly):
            return QuadInt(self.ctx, self.u * other, self.v * other)
        self._check(other)
        B, C = self.ctx.min_poly
        uu = self.u * other.u
        vv = self.v * other.v
        return QuadInt(
            self.ctx,
            uu - C * vv,
            self.u * other.v + other.u * self.v - B * vv,
        )

    def scale(self, c: int) -> "QuadInt":
        return QuadInt(self.ctx, self.u.scale(c), self.v.scale(c))

    def conj(self) -> "QuadInt":
        B, _ = self.ctx.min_poly
        return QuadInt(self.ctx, self.u - B * self.v, -self.v)

    def norm(self) -> Poly:
        return self.ctx.norm_form(self.u, self.v)

    def is_constant(self) -> bool:
        return self.u.is_constant() and not self.v.coeffs

    def inverse(self) -> "QuadInt":
        """范数为非零常数时的逆元"""
        n = self.norm()
        if not n.coeffs or n.deg > 0:
            raise InvalidInput(f"{self} 不是单位(范数 {n})")
        return self.conj().scale(self.ctx.field.inv(n.lc))

    def __pow__(self, n: int) -> "QuadInt":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.ctx.one()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadInt):
            return NotImplemented
        return self.ctx.min_poly == other.ctx.min_poly and self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        return hash((self.ctx.min_poly, self.u, self.v))

    @property
    def degree(self) -> Degree:
        """max(deg u, deg v)"""
        return max(self.u.deg, self.v.deg)

    def series_degree(self) -> Degree:
        return self.ctx.series_degree(self.u, self.v)

    def deg_imaginary(self) -> Union[Fraction, float]:
        return deg_imaginary(self)

    def __str__(self) -> str:
        return f"({self.u}) + Δ*({self.v})"


def norm(w: QuadInt) -> Poly:
    return w.norm()


def conj(w: QuadInt) -> QuadInt:
    return w.conj()


def qmul(w1: QuadInt, w2: QuadInt) -> QuadInt:
    return w1 * w2


def deg_imaginary(w: QuadInt) -> Union[Fraction, float]:
    """Deg(u + Δv) = max(deg u, deg v + deg c / 2), 只对奇数次 c 的虚情形定义"""
    ctx = w.ctx
    if ctx.case != QuadCase.IMAGINARY or ctx.imaginary_kind != ImaginaryKind.ODD_DEGREE:
        raise InvalidInput(f"Deg 只在 deg c 为奇数的虚情形有定义, 当前为 {ctx.describe()}")
    half_c = Fraction(int(ctx.c.deg), 2)
    values = []
    if w.u.coeffs:
        values.append(Fraction(int(w.u.deg)))
    if w.v.coeffs:
        values.append(Fraction(int(w.v.deg)) + half_c)
    return max(values) if values else NEG_INF


# -------------------------------------------------------------------- 分类


def _norm_form(F: FieldSpec, b: Poly, c: Poly) -> Tuple[Poly, Poly, Poly]:
    """N(u + Δv) 作为二次型的系数: 特征 2 为 (1, b, c), 奇特征为 (1, 0, -c)"""
    if F.p == 2:
        return Poly.one(F), b, c
    return Poly.one(F), b, -c


def _rational_context(
    F: FieldSpec, b: Poly, c: Poly, shift: Poly, roots: Tuple[Poly, Poly], shifts: List[str]
) -> QuadContext:
    return QuadContext(
        field=F,
        b=b,
        c=c,
        case=QuadCase.RATIONAL,
        transform=ContextTransform(Poly.one(F), shift),
        form=_norm_form(F, b, c),
        rational_roots=roots,
        shifts=tuple(shifts),
    )


def _labelled(
    F: FieldSpec,
    b: Poly,
    c: Poly,
    case: QuadCase,
    shift: Poly,
    kind: Optional[ImaginaryKind],
    shifts: List[str],
    form: Optional[Tuple[Poly, Poly, Poly]] = None,
) -> QuadContext:
    return QuadContext(
        field=F,
        b=b,
        c=c,
        case=case,
        transform=ContextTransform(Poly.one(F), shift),
        form=form or _norm_form(F, b, c),
        imaginary_kind=kind,
        shifts=tuple(shifts),
    )


def _classify_odd(b: Poly, c: Poly) -> QuadContext:
    F = c.field
    zero = Poly.zero(F)
    if b.coeffs:
        raise InvalidInput("奇特征下 classify 要求 b = 0 (方程 t^2 = c)")
    root = poly_sqrt(c)
    if root is not None:
        return _rational_context(F, zero, c, zero, (root, -root), [])
    if c.deg % 2 or not F.is_square(c.lc):
        kind = ImaginaryKind.ODD_DEGREE if c.deg % 2 else ImaginaryKind.UNSOLVABLE_LEADING
        return _labelled(F, zero, c, QuadCase.IMAGINARY, zero, kind, [])
    return _labelled(F, zero, c, QuadCase.REAL, zero, None, [])


def _classify_char2_inseparable(c: Poly) -> QuadContext:
    F = c.field
    zero = Poly.zero(F)
    root = c.frobenius_root()
    if root is not None:
        return _rational_context(F, zero, c, zero, (root, root), [])
    return _labelled(F, zero, c, QuadCase.IMAGINARY, zero, ImaginaryKind.INSEPARABLE, [])


def _classify_char2(b: Poly, c: Poly) -> QuadContext:
    """
    特征 2, b != 0: 反复用 u -> u + w*v 降低 deg c,
    直到 deg c < deg b (实), 或判定为虚, 或 c 变为 0 (有理)。
    """
    F = b.field
    m = int(b.deg)
    b0 = b.lc
    total = Poly.zero(F)
    steps: List[str] = []
    while True:
        if not c.coeffs:
            # t^2 + b t = t (t + b); 原方程的根为 total 与 total + b
            return _rational_context(F, b, c, total, (Poly.zero(F), b), steps)
        n = int(c.deg)
        if n < m:
            return _labelled(F, b, c, QuadCase.REAL, total, None, steps, form=None)
        if n > 2 * m:
            if n % 2:
                return _labelled(F, b, c, QuadCase.IMAGINARY, total, ImaginaryKind.ODD_DEGREE, steps)
            w = Poly.monomial(F, F.sqrt(c.lc), n // 2)
            steps.append(f"top-square:{w}")
        elif n == 2 * m:
            target = F.div(c.lc, F.mul(b0, b0))
            t = next((t for t in F.elements() if F.add(F.add(F.mul(t, t), t), target) == 0), None)
            if t is None:
                return _labelled(
                    F, b, c, QuadCase.IMAGINARY, total, ImaginaryKind.UNSOLVABLE_LEADING, steps
                )
            w = b.scale(t)
            steps.append(f"leading-root:{w}")
        else:
            w = c // b
            steps.append(f"divide-by-b:{w}")
        c = w * w + b * w + c
        total = total + w
        logger.debug(f"特征 2 替换 u -> u + ({w})v, 新 c = {c}")


def classify(b: Poly, c: Poly) -> QuadContext:
    """
    分类 t^2 + b t + c (特征 2) 或 t^2 = c (奇特征, b = 0)
    返回的上下文中 transform.shift 记录了累计替换 u -> u_n + shift*v。
    """
    F = c.field
    if F.p != 2:
        ctx = _classify_odd(b, c)
    elif not b.coeffs:
        ctx = _classify_char2_inseparable(c)
    else:
        ctx = _classify_char2(b, c)
    # 原始坐标中的二次型是替换之前的范数
    ctx = replace(ctx, form=_norm_form(F, b, c))
    logger.debug(f"分类 b={b}, c={c}: {ctx.describe()}")
    return ctx


def has_series_root(b: Poly, c: Poly) -> Optional[bool]:
    """
    不经分类, 直接用级数剥离判断是否存在级数根
    有多项式根时返回 None。
    """
    F = c.field
    B, C = (b, c) if F.p == 2 else (b, -c)
    try:
        return quadratic_roots(B, C) is not None
    except RationalCase:
        return None


__all__ = [
    "QuadCase",
    "ImaginaryKind",
    "ContextTransform",
    "QuadContext",
    "QuadInt",
    "norm",
    "conj",
    "qmul",
    "deg_imaginary",
    "classify",
    "has_series_root",
]

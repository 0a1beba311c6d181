"""
多项式运算模块
F_q[x] 上的精确运算: 带余除法、gcd、平方根、因式分解与因子枚举

约定 deg(0) = NEG_INF, 并满足 NEG_INF + n = NEG_INF, max(NEG_INF, n) = n。
"""
import itertools
import logging
import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .gf import FieldSpec
from ..exceptions import DivisionByZero, InternalInvariantViolation, InvalidInput, ParseError

logger = logging.getLogger(__name__)

NEG_INF = float("-inf")

Degree = Union[int, float]


def _normalize(coeffs: Sequence[int]) -> Tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Poly:
    """F_q[x] 中的多项式, coeffs[i] 为 x^i 的系数编码"""
    field: FieldSpec
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _normalize(tuple(self.coeffs)))

    # ---------------------------------------------------------------- 构造
    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def const(cls, field: FieldSpec, c: int) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldSpec, c: int, n: int) -> "Poly":
        return cls(field, (0,) * n + (c,))

    # ---------------------------------------------------------------- 属性
    @property
    def deg(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # ---------------------------------------------------------------- 运算
    def _check(self, other: "Poly") -> None:
        if other.field != self.field:
            raise InvalidInput("多项式不属于同一个域")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, tuple(out))

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.field, ())
        F = self.field
        if F.k == 1:
            p = F.p
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return Poly(F, tuple(c % p for c in out))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, tuple(out))

    def scale(self, c: int) -> "Poly":
        F = self.field
        if c == 0:
            return Poly(F, ())
        return Poly(F, tuple(F.mul(c, a) for a in self.coeffs))

    def shift(self, n: int) -> "Poly":
        """乘以 x^n (n >= 0)"""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * n + self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        result = Poly.one(self.field)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        self._check(other)
        if not other.coeffs:
            raise DivisionByZero("除以零多项式")
        F = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Poly(F, ()), self
        inv_lc = F.inv(other.lc)
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            t = F.mul(c, inv_lc)
            quot[i - db] = t
            for j, bj in enumerate(other.coeffs):
                if bj:
                    rem[i - db + j] = F.sub(rem[i - db + j], F.mul(t, bj))
        return Poly(F, tuple(quot)), Poly(F, tuple(rem[:db]))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """self | other"""
        if not self.coeffs:
            return not other.coeffs
        return not (other % self).coeffs

    def exact_div(self, other: "Poly") -> Optional["Poly"]:
        """整除时返回商, 否则 None"""
        if not other.coeffs:
            return None
        q, r = divmod(self, other)
        return None if r.coeffs else q

    def monic(self) -> "Poly":
        if not self.coeffs or self.lc == 1:
            return self
        return self.scale(self.field.inv(self.lc))

    def evaluate(self, a: int) -> int:
        F = self.field
        value = 0
        for c in reversed(self.coeffs):
            value = F.add(F.mul(value, a), c)
        return value

    def split_even_odd(self) -> Tuple["Poly", "Poly"]:
        """f(x) = f0(x^2) + x*f1(x^2)"""
        F = self.field
        return Poly(F, self.coeffs[0::2]), Poly(F, self.coeffs[1::2])

    def frobenius_root(self) -> Optional["Poly"]:
        """特征 2 下的逐系数平方根, 出现奇次项时返回 None"""
        F = self.field
        if any(self.coeffs[1::2]):
            return None
        roots = [F.sqrt(c) for c in self.coeffs[0::2]]
        return Poly(F, tuple(r if r is not None else 0 for r in roots))

    # ---------------------------------------------------------------- 文本
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"

    def sort_key(self) -> Tuple[Degree, Tuple[int, ...]]:
        return (self.deg, tuple(reversed(self.coeffs)))


def pdeg(f: Poly) -> Degree:
    return f.deg


def format_poly(f: Poly) -> str:
    F = f.field
    if not f.coeffs:
        return "0"
    terms: List[str] = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        text = F.format(c)
        if F.is_compound(c):
            text = f"({text})"
        if i == 0:
            terms.append(text)
            continue
        mono = "x" if i == 1 else f"x^{i}"
        terms.append(mono if c == 1 else f"{text}*{mono}")
    return "+".join(terms)


_TERM = re.compile(r"^(?P<coef>.*?)\*?x(?:\^(?P<exp>\d+))?$")


def _split_terms(text: str) -> List[Tuple[str, str, int]]:
    """按顶层 +/- 切分, 返回 (符号, 项, 起始列)"""
    terms: List[Tuple[str, str, int]] = []
    depth = 0
    sign = "+"
    start = 0
    if text[0] in "+-":
        sign, start = text[0], 1
    for i in range(start, len(text)):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("括号不匹配", column=i + 1)
        elif ch in "+-" and depth == 0 and text[i - 1] not in "^*":
            terms.append((sign, text[start:i], start))
            sign = ch
            start = i + 1
    if depth != 0:
        raise ParseError("括号不匹配", column=len(text))
    terms.append((sign, text[start:], start))
    return terms


def parse_poly(field: FieldSpec, text: str) -> Poly:
    """解析多项式文本: c*x^i, x^i, x, c 由 +/- 连接"""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("空的多项式")
    acc: Dict[int, int] = {}
    for sign, term, col in _split_terms(s):
        if not term:
            raise ParseError(f"'{text}' 中存在空项", column=col + 1)
        m = _TERM.match(term)
        try:
            if m is not None and "x" not in m.group("coef"):
                coef_text = m.group("coef")
                exp = int(m.group("exp")) if m.group("exp") else 1
                coef = field.parse(coef_text.strip("()")) if coef_text else 1
            else:
                if "x" in term:
                    raise ParseError(f"无法解析项 '{term}'", column=col + 1)
                exp = 0
                coef = field.parse(term.strip("()"))
        except ParseError as e:
            raise ParseError(f"项 '{term}': {e.message}", column=col + 1) from e
        if sign == "-":
            coef = field.neg(coef)
        acc[exp] = field.add(acc.get(exp, 0), coef)
    top = max(acc) if acc else 0
    return Poly(field, tuple(acc.get(i, 0) for i in range(top + 1)))


# -------------------------------------------------------------------- gcd


def poly_xgcd(f: Poly, g: Poly) -> Tuple[Poly, Poly, Poly]:
    """扩展欧几里得: 返回 (h, s, t), h 首一且 h = s*f + t*g"""
    if not f.coeffs and not g.coeffs:
        raise InvalidInput("gcd(0, 0) 无定义")
    F = f.field
    r0, r1 = f, g
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while r1.coeffs:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = F.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    return poly_xgcd(f, g)[0]


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if not f.coeffs or not g.coeffs:
        return Poly.zero(f.field)
    return ((f * g) // poly_gcd(f, g)).monic()


# -------------------------------------------------------------------- 平方根


def poly_sqrt(f: Poly) -> Optional[Poly]:
    """
    多项式平方根
    特征 2: 逐系数开方; 奇特征: 从首项向下递推并平方校验。
    奇特征时返回首项编码较小的那个根。
    """
    F = f.field
    if not f.coeffs:
        return f
    if F.p == 2:
        return f.frobenius_root()
    deg = len(f.coeffs) - 1
    if deg % 2:
        return None
    top = F.sqrt(f.lc)
    if top is None:
        return None
    top = min(top, F.neg(top))
    n = deg // 2
    g = [0] * (n + 1)
    g[n] = top
    inv_2top = F.inv(F.add(top, top))
    for i in range(n - 1, -1, -1):
        s = 0
        for j in range(i + 1, n):
            l_ = n + i - j
            if i < l_ < n:
                s = F.add(s, F.mul(g[j], g[l_]))
        g[i] = F.mul(F.sub(f.coeff(n + i), s), inv_2top)
    root = Poly(F, tuple(g))
    return root if root * root == f else None


# -------------------------------------------------------------------- 枚举


def monic_polys(field: FieldSpec, n: int) -> Iterator[Poly]:
    """n 次首一多项式, 按系数向量字典序"""
    for tail in itertools.product(range(field.q), repeat=n):
        yield Poly(field, tuple(reversed(tail)) + (1,))


def polys_up_to(field: FieldSpec, n: Degree) -> Iterator[Poly]:
    """次数 <= n 的全部多项式(含零), 按编码顺序"""
    if n == NEG_INF or n < 0:
        yield Poly.zero(field)
        return
    length = int(n) + 1
    q = field.q
    for index in range(q ** length):
        coeffs = []
        for _ in range(length):
            index, r = divmod(index, q)
            coeffs.append(r)
        yield Poly(field, tuple(coeffs))


def nonzero_scalars(field: FieldSpec) -> List[Poly]:
    return [Poly.const(field, c) for c in field.nonzero()]


# -------------------------------------------------------------------- 分解


def poly_factor(f: Poly) -> Tuple[int, List[Tuple[Poly, int]]]:
    """
    试除法分解为首一不可约因子
    返回 (首项系数, [(因子, 重数), ...])
    """
    if not f.coeffs:
        raise InvalidInput("零多项式没有分解")
    F = f.field
    g = f.monic()
    found: Counter = Counter()
    d = 1
    while 2 * d <= g.deg:
        for h in monic_polys(F, d):
            while g.deg >= d:
                q, r = divmod(g, h)
                if r.coeffs:
                    break
                found[h] += 1
                g = q
        d += 1
    if g.deg > 0:
        found[g] += 1
    factors = sorted(found.items(), key=lambda item: item[0].sort_key())
    logger.debug(f"分解 {f}: {[(str(h), e) for h, e in factors]}")
    return f.lc, factors


def poly_divisors(f: Poly) -> List[Poly]:
    """全部首一因子, 按 (次数, 系数) 排序"""
    _, factors = poly_factor(f)
    F = f.field
    divisors = [Poly.one(F)]
    for h, e in factors:
        powers = [h ** i for i in range(1, e + 1)]
        divisors = divisors + [d * pw for d in divisors for pw in powers]
    for d in divisors:
        if not d.divides(f):
            raise InternalInvariantViolation(f"因子校验失败: {d} 不整除 {f}")
    return sorted(set(divisors), key=lambda p: p.sort_key())


__all__ = [
    "Poly",
    "NEG_INF",
    "Degree",
    "pdeg",
    "format_poly",
    "parse_poly",
    "poly_gcd",
    "poly_xgcd",
    "poly_lcm",
    "poly_sqrt",
    "poly_factor",
    "poly_divisors",
    "monic_polys",
    "polys_up_to",
    "nonzero_scalars",
]

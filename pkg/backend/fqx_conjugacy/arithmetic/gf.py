"""
有限域运算模块
F_q (q = p^k) 上的精确运算、平方根与全域枚举

域元素在内部以整数编码 0..q-1 表示: 编码的 p 进制各位就是该元素在
幂基 1, a, ..., a^(k-1) 下的坐标。乘法与求逆使用本原元的指数/对数表。
"""
import itertools
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from ..core.config import settings
from ..exceptions import DivisionByZero, InvalidInput, ParseError

logger = logging.getLogger(__name__)

# 小扩域的默认模多项式(系数从低次到高次)
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),        # a^2 + a + 1
    (2, 3): (1, 1, 0, 1),     # a^3 + a + 1
    (3, 2): (1, 0, 1),        # a^2 + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _fp_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    """F_p 上多项式取模(系数从低到高, m 首一)"""
    r = _fp_trim([x % p for x in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        coef = r[-1]
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            r[shift + i] = (r[shift + i] - coef * mi) % p
        _fp_trim(r)
    return r


def _fp_irreducible(modulus: Sequence[int], p: int) -> bool:
    """试除法判断 F_p 上首一多项式的不可约性"""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _fp_mod(modulus, divisor, p):
                return False
    return True


def _first_irreducible(p: int, k: int) -> Tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=k):
        candidate = tuple(reversed(tail)) + (1,)
        if candidate[0] != 0 and _fp_irreducible(candidate, p):
            return candidate
    raise InvalidInput(f"找不到 F_{p} 上 {k} 次不可约多项式")


@dataclass(frozen=True)
class FieldSpec:
    """有限域 F_q 的描述, q = p^k"""
    p: int
    k: int
    modulus: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def characteristic(self) -> int:
        return self.p

    @classmethod
    def create(cls, p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> "FieldSpec":
        """构造并校验域描述"""
        if not _is_prime(p):
            raise InvalidInput(f"特征 {p} 不是素数")
        if k < 1:
            raise InvalidInput(f"扩张次数 {k} 必须 >= 1")
        if p ** k > settings.MAX_FIELD_ORDER:
            raise InvalidInput(f"域的阶 {p}^{k} 超过上限 {settings.MAX_FIELD_ORDER}")

        if modulus is None:
            if k == 1:
                mod: Tuple[int, ...] = (0, 1)
            else:
                mod = DEFAULT_MODULI.get((p, k)) or _first_irreducible(p, k)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != k + 1 or mod[-1] != 1:
                raise InvalidInput(f"模多项式必须是 {k} 次首一多项式")
            if k > 1 and not _fp_irreducible(mod, p):
                raise InvalidInput(f"模多项式 {mod} 在 F_{p} 上可约")
        return cls(p=p, k=k, modulus=mod)

    # ---------------------------------------------------------------- 坐标
    def coords(self, a: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_coords(self, coords: Sequence[int]) -> int:
        value = 0
        for c in reversed(list(coords)[: self.k]):
            value = value * self.p + (c % self.p)
        return value

    # ---------------------------------------------------------------- 运算
    @property
    def _tables(self) -> "_FieldTables":
        return _field_tables(self)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._tables.add(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_coords([-c for c in self.coords(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return (a * b) % self.p
        t = self._tables
        return t.exp[t.log[a] + t.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("有限域中对零求逆")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        t = self._tables
        return t.exp[(self.q - 1 - t.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        if a == 0:
            return 1 if n == 0 else 0
        t = self._tables
        return t.exp[(t.log[a] * n) % (self.q - 1)]

    def sqrt(self, a: int) -> Optional[int]:
        """平方根: 特征 2 时总存在且唯一, 奇特征时不存在返回 None"""
        if a == 0:
            return 0
        t = self._tables
        la = t.log[a]
        if self.p == 2:
            # a^(q/2), Frobenius 的逆
            return t.exp[(la * (self.q // 2)) % (self.q - 1)]
        if la % 2:
            return None
        return t.exp[la // 2]

    def is_square(self, a: int) -> bool:
        return self.sqrt(a) is not None

    def elements(self) -> range:
        """全部元素编码, 以 0, 1 开头"""
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def non_square(self) -> int:
        """奇特征时取编码最小的非平方元"""
        for a in self.nonzero():
            if not self.is_square(a):
                return a
        raise InvalidInput("特征 2 的域中每个元素都是平方")

    # ---------------------------------------------------------------- 文本
    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.coords(a)))):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "a" if i == 1 else f"a^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def is_compound(self, a: int) -> bool:
        """打印时是否需要括号"""
        return self.k > 1 and sum(1 for c in self.coords(a) if c) > 1

    def parse(self, text: str) -> int:
        """解析域元素: 整数或关于 a 的多项式"""
        s = text.replace(" ", "")
        if not s:
            raise ParseError("空的域元素")
        if re.fullmatch(r"-?\d+", s):
            if self.k == 1:
                return int(s) % self.p
            return self.from_coords([int(s) % self.p])
        if self.k == 1:
            raise ParseError(f"素域中不能出现 '{text}'")
        coords = [0] * self.k
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+)\*?)?a(?:\^(\d+))?|(\d+)", body)
            if m is None:
                raise ParseError(f"无法解析域元素 '{text}'")
            if m.group(3) is not None:
                coef, exp = int(m.group(3)), 0
            else:
                coef = int(m.group(1)) if m.group(1) else 1
                exp = int(m.group(2)) if m.group(2) else 1
            if sign == "-":
                coef = -coef
            # 高次幂按模多项式约化
            contribution = _fp_mod([0] * exp + [coef], self.modulus, self.p)
            for i, c in enumerate(contribution):
                coords[i] = (coords[i] + c) % self.p
        return self.from_coords(coords)

    def describe(self) -> str:
        header = f"field p={self.p} k={self.k}"
        if self.k > 1:
            header += " modulus=" + _format_modulus(self.modulus)
        return header


def _format_modulus(modulus: Sequence[int]) -> str:
    terms = []
    for i in range(len(modulus) - 1, -1, -1):
        c = modulus[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "a" if i == 1 else f"a^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)


class _FieldTables:
    """指数/对数表与(小域的)加法表"""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        q = spec.q
        self.log: List[int] = [-1] * q
        self.exp: List[int] = [0] * (2 * (q - 1) + 1)
        generator = self._find_generator()
        value = 1
        for i in range(q - 1):
            self.exp[i] = value
            self.log[value] = i
            value = self._raw_mul(value, generator)
        for i in range(q - 1, len(self.exp)):
            self.exp[i] = self.exp[i - (q - 1)]
        self._add_table: Optional[List[List[int]]] = None
        if spec.k > 1 and spec.p != 2 and q <= 256:
            self._add_table = [[self._raw_add(a, b) for b in range(q)] for a in range(q)]
        logger.debug(f"构造域表 F_{q}, 本原元编码 {generator}")

    def _raw_add(self, a: int, b: int) -> int:
        spec = self.spec
        return spec.from_coords([x + y for x, y in zip(spec.coords(a), spec.coords(b))])

    def _raw_mul(self, a: int, b: int) -> int:
        spec = self.spec
        if spec.k == 1:
            return (a * b) % spec.p
        ca, cb = spec.coords(a), spec.coords(b)
        prod = [0] * (2 * spec.k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return spec.from_coords(_fp_mod(prod, spec.modulus, spec.p))

    def _find_generator(self) -> int:
        q = self.spec.q
        if q == 2:
            return 1
        for g in range(2, q):
            value, order = g, 1
            while value != 1:
                value = self._raw_mul(value, g)
                order += 1
                if order > q - 1:
                    break
            if order == q - 1:
                return g
        raise InvalidInput(f"F_{q} 中找不到本原元")

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._raw_add(a, b)


@lru_cache(maxsize=None)
def _field_tables(spec: FieldSpec) -> _FieldTables:
    return _FieldTables(spec)


@dataclass(frozen=True)
class FieldElement:
    """F_q 的元素"""
    spec: FieldSpec
    value: int

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.spec.coords(self.value)

    def _check(self, other: "FieldElement") -> None:
        if other.spec != self.spec:
            raise InvalidInput("域元素不属于同一个域")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.sub(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.mul(self.value, other.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.spec.div(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, n: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.pow(self.value, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.spec.format(self.value)


def field_sqrt(a: FieldElement) -> Optional[FieldElement]:
    root = a.spec.sqrt(a.value)
    return None if root is None else FieldElement(a.spec, root)


def is_square(a: FieldElement) -> bool:
    """Euler 判别: a^((q-1)/2) ∈ {0, 1}(奇特征)"""
    spec = a.spec
    if spec.p == 2 or a.value == 0:
        return True
    return spec.pow(a.value, (spec.q - 1) // 2) == 1


def field_enumerate(spec: FieldSpec) -> Iterator[FieldElement]:
    for value in spec.elements():
        yield FieldElement(spec, value)


__all__ = [
    "FieldSpec",
    "FieldElement",
    "field_sqrt",
    "is_square",
    "field_enumerate",
    "DEFAULT_MODULI",
]

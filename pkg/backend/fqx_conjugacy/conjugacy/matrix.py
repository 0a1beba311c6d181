"""
2x2 多项式矩阵
M_2(F_q[x]) 中的乘法、行列式、形状判定与文本格式 [[a11,a12],[a21,a22]]
"""
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from ..arithmetic.gf import FieldSpec
from ..arithmetic.poly import NEG_INF, Degree, Poly, parse_poly
from ..exceptions import InvalidInput, ParseError


@dataclass(frozen=True)
class Matrix2:
    """[[a11, a12], [a21, a22]]"""
    a11: Poly
    a12: Poly
    a21: Poly
    a22: Poly

    def __post_init__(self) -> None:
        fields = {e.field for e in self.entries()}
        if len(fields) != 1:
            raise InvalidInput("矩阵的元素不在同一个域上")

    # ---------------------------------------------------------------- 构造
    @classmethod
    def identity(cls, field: FieldSpec) -> "Matrix2":
        one, zero = Poly.one(field), Poly.zero(field)
        return cls(one, zero, zero, one)

    @classmethod
    def scalar(cls, c: Poly) -> "Matrix2":
        zero = Poly.zero(c.field)
        return cls(c, zero, zero, c)

    @classmethod
    def swap(cls, field: FieldSpec) -> "Matrix2":
        """反对角置换矩阵, 自身为逆"""
        one, zero = Poly.one(field), Poly.zero(field)
        return cls(zero, one, one, zero)

    @classmethod
    def from_rows(cls, rows: List[List[Poly]]) -> "Matrix2":
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise InvalidInput("矩阵必须是 2x2")
        return cls(rows[0][0], rows[0][1], rows[1][0], rows[1][1])

    # ---------------------------------------------------------------- 性质
    @property
    def field(self) -> FieldSpec:
        return self.a11.field

    def entries(self) -> Tuple[Poly, Poly, Poly, Poly]:
        return self.a11, self.a12, self.a21, self.a22

    def rows(self) -> List[List[Poly]]:
        return [[self.a11, self.a12], [self.a21, self.a22]]

    def trace(self) -> Poly:
        return self.a11 + self.a22

    def det(self) -> Poly:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def degree(self) -> Degree:
        """元素次数的最大值, 零矩阵为 -inf"""
        return max(e.deg for e in self.entries())

    def is_scalar(self) -> bool:
        return not self.a12.coeffs and not self.a21.coeffs and self.a11 == self.a22

    def is_diagonal(self) -> bool:
        return not self.a12.coeffs and not self.a21.coeffs

    def is_upper_triangular(self) -> bool:
        return not self.a21.coeffs

    def is_lower_triangular(self) -> bool:
        return not self.a12.coeffs

    def is_triangular(self) -> bool:
        return self.is_upper_triangular() or self.is_lower_triangular()

    def is_invertible(self) -> bool:
        """det ∈ F*"""
        d = self.det()
        return bool(d.coeffs) and d.deg == 0

    # ---------------------------------------------------------------- 运算
    def __add__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(*(x + y for x, y in zip(self.entries(), other.entries())))

    def __sub__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(*(x - y for x, y in zip(self.entries(), other.entries())))

    def __mul__(self, other: "Matrix2") -> "Matrix2":
        if other.field != self.field:
            raise InvalidInput("矩阵不在同一个域上")
        return Matrix2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def scale(self, c: int) -> "Matrix2":
        return Matrix2(*(e.scale(c) for e in self.entries()))

    def poly_scale(self, f: Poly) -> "Matrix2":
        return Matrix2(*(e * f for e in self.entries()))

    def exact_div(self, f: Poly) -> Optional["Matrix2"]:
        parts = [e.exact_div(f) for e in self.entries()]
        if any(p is None for p in parts):
            return None
        return Matrix2(*parts)  # type: ignore[arg-type]

    def adjugate(self) -> "Matrix2":
        return Matrix2(self.a22, -self.a12, -self.a21, self.a11)

    def inverse(self) -> "Matrix2":
        """GL(2, F[x]) 中的逆"""
        if not self.is_invertible():
            raise InvalidInput(f"矩阵 {self} 的行列式 {self.det()} 不在 F* 中")
        return self.adjugate().scale(self.field.inv(self.det().lc))

    def conjugate_by(self, U: "Matrix2") -> "Matrix2":
        """U * self * U^{-1}"""
        return U * self * U.inverse()

    def transpose(self) -> "Matrix2":
        return Matrix2(self.a11, self.a21, self.a12, self.a22)

    def __iter__(self) -> Iterator[Poly]:
        return iter(self.entries())

    def __str__(self) -> str:
        return format_matrix(self)


def format_matrix(M: Matrix2) -> str:
    return f"[[{M.a11},{M.a12}],[{M.a21},{M.a22}]]"


_MATRIX = re.compile(r"^\[\[(?P<r1>.*)\],\[(?P<r2>.*)\]\]$")


def _split_row(text: str) -> List[str]:
    """按括号外的逗号切分"""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_matrix(field: FieldSpec, text: str) -> Matrix2:
    s = text.replace(" ", "")
    m = _MATRIX.match(s)
    if m is None:
        raise ParseError(f"无法解析矩阵 '{text}', 应为 [[a11,a12],[a21,a22]]")
    rows = []
    for key in ("r1", "r2"):
        cells = _split_row(m.group(key))
        if len(cells) != 2:
            raise ParseError(f"矩阵的行 '{m.group(key)}' 必须恰有两个元素")
        rows.append([parse_poly(field, c) for c in cells])
    return Matrix2.from_rows(rows)


def max_degree(*matrices: Matrix2) -> int:
    """δ: 全部元素次数的最大值, 常数矩阵为 0"""
    degs = [M.degree for M in matrices]
    top = max(degs) if degs else NEG_INF
    return 0 if top == NEG_INF else int(top)


__all__ = ["Matrix2", "format_matrix", "parse_matrix", "max_degree"]

"""
中心化子的生成元
半单的非数量矩阵 A, 其中心化子是 F[x][A0], A0 = (A - a11*I) / gcd(a12, a21, a22 - a11)。
可逆元 u*I + v*A0 对应二次环中的单位, 行列式即 u^2 + tr(A0)*uv + det(A0)*v^2。
"""
import logging
from dataclasses import dataclass
from typing import Optional

from .matrix import Matrix2, max_degree
from ..algebra.quadring import QuadCase, QuadContext
from ..algebra.units import fundamental_unit
from ..arithmetic.poly import Poly, poly_gcd
from ..exceptions import InternalInvariantViolation, Unsupported

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CentralizerReport:
    A: Matrix2
    primitive: Matrix2
    case: QuadCase
    generator: Optional[Matrix2]
    description: str

    @property
    def infinite(self) -> bool:
        return self.generator is not None


def is_semisimple(A: Matrix2) -> bool:
    """特征多项式无重根, 或 (特征 2) 不可分且不可约"""
    tr, det = A.trace(), A.det()
    if A.field.p == 2:
        return bool(tr.coeffs) or det.frobenius_root() is None
    disc = tr * tr - det.scale(A.field.add(A.field.add(1, 1), A.field.add(1, 1)))
    return bool(disc.coeffs)


def primitive_part(A: Matrix2) -> Matrix2:
    """A0 = (A - a11*I) / g"""
    F = A.field
    shifted = A - Matrix2.scalar(A.a11)
    nonzero = [e for e in shifted.entries() if e.coeffs]
    if not nonzero:
        raise Unsupported(f"{A} 是数量矩阵")
    g = nonzero[0]
    for e in nonzero[1:]:
        g = poly_gcd(g, e)
    g = g.monic()
    A0 = shifted.exact_div(g)
    if A0 is None:
        raise InternalInvariantViolation("gcd 不整除矩阵元素", {"A": str(A), "gcd": str(g)})
    logger.debug(f"本原部分 A0 = {A0}, g = {g}, 域 {F.describe()}")
    return A0


def centralizer_bound(A: Matrix2) -> int:
    """deg(A) * q^(2 deg A)"""
    m = max_degree(A)
    return m * A.field.q ** (2 * m)


def centralizer_generator(A: Matrix2) -> CentralizerReport:
    """Z(A) 无限时给出生成元 U = u*I + v*A0; 否则给出有限性的原因"""
    if A.is_scalar():
        raise Unsupported("数量矩阵的中心化子是整个 GL(2, F[x])")
    if not is_semisimple(A):
        raise Unsupported(f"{A} 不是半单矩阵")
    F = A.field
    A0 = primitive_part(A)
    ctx = QuadContext.from_form(Poly.one(F), A0.trace(), A0.det())
    if ctx.case != QuadCase.REAL:
        reason = "有限" if ctx.case == QuadCase.IMAGINARY else "有理情形, 中心化子由对角化给出"
        description = f"{ctx.describe()}: {reason}"
        logger.info(f"中心化子没有无限阶生成元: {description}")
        return CentralizerReport(A=A, primitive=A0, case=ctx.case, generator=None,
                                 description=description)
    unit = fundamental_unit(ctx)
    mapped = ctx.transform.to_original(unit.generator.u, unit.generator.v)
    if mapped is None:
        raise InternalInvariantViolation("基本单位无法映射回原坐标", {"unit": str(unit.generator)})
    u, v = mapped
    U = Matrix2.scalar(u) + A0.poly_scale(v)
    if U * A != A * U or not U.is_invertible():
        raise InternalInvariantViolation(
            "中心化子生成元验证失败", {"A": str(A), "U": str(U), "det": str(U.det())}
        )
    bound = centralizer_bound(A)
    if U.degree > bound:
        raise InternalInvariantViolation(
            f"生成元次数 {U.degree} 超过界 {bound}", {"A": str(A), "U": str(U)}
        )
    description = f"{ctx.describe()}: 单位次数 k = {unit.degree_k}"
    logger.info(f"中心化子生成元 {U}")
    return CentralizerReport(A=A, primitive=A0, case=ctx.case, generator=U, description=description)


__all__ = [
    "CentralizerReport",
    "centralizer_generator",
    "centralizer_bound",
    "is_semisimple",
    "primitive_part",
]

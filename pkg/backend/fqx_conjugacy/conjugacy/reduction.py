"""
共轭问题到二次方程的约化

U = [[u, p], [v, q]], 由 U*A = B*U 的 (1,1) 与 (2,1) 元消去 p, q:
    p = ((b11 - a11)*u + b12*v) / a21
    q = (b21*u + (b22 - a11)*v) / a21
代入 det U = α 得 b21*u^2 + (b22 - b11)*uv - b12*v^2 = α*a21。
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .matrix import Matrix2
from ..algebra.normsolver import DivisibilityForm
from ..algebra.quadring import QuadContext
from ..arithmetic.poly import Poly
from ..exceptions import InternalInvariantViolation, InvalidInput

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalizedPair:
    """
    A' = S_A*A*S_A, B' = S_B*B*S_B, S 为单位阵或反对角置换阵
    A' 与 B' 的左下元都不为零
    """
    A: Matrix2
    B: Matrix2
    S_A: Matrix2
    S_B: Matrix2
    swapped: Tuple[bool, bool]

    def lift(self, U: Matrix2) -> Matrix2:
        """U'*A' = B'*U' 时, S_B*U'*S_A 共轭 A 到 B"""
        return self.S_B * U * self.S_A


def _lower_left_nonzero(M: Matrix2) -> Tuple[Matrix2, Matrix2, bool]:
    F = M.field
    if M.a21.coeffs:
        return M, Matrix2.identity(F), False
    if not M.a12.coeffs:
        raise InvalidInput(f"对角矩阵 {M} 不能通过置换化为左下元非零")
    S = Matrix2.swap(F)
    return S * M * S, S, True


def normalize_pair(A: Matrix2, B: Matrix2) -> NormalizedPair:
    A1, S_A, sa = _lower_left_nonzero(A)
    B1, S_B, sb = _lower_left_nonzero(B)
    if sa or sb:
        logger.debug(f"置换共轭: A {'已' if sa else '未'}交换, B {'已' if sb else '未'}交换")
    return NormalizedPair(A=A1, B=B1, S_A=S_A, S_B=S_B, swapped=(sa, sb))


@dataclass(frozen=True)
class QuadraticRelation:
    """二次关系 a*u^2 + b*uv + c*v^2 = rhs 及其来源 (A', B', α)"""
    A: Matrix2
    B: Matrix2
    alpha: int
    form: Tuple[Poly, Poly, Poly]
    rhs: Poly

    @classmethod
    def build(cls, A: Matrix2, B: Matrix2, alpha: int) -> "QuadraticRelation":
        if not A.a21.coeffs or not B.a21.coeffs:
            raise InvalidInput("约化要求 a21 != 0 且 b21 != 0")
        form = (B.a21, B.a22 - B.a11, -B.a12)
        rhs = A.a21.scale(alpha)
        rel = cls(A=A, B=B, alpha=alpha, form=form, rhs=rhs)
        if A.field.p == 2:
            rel._check_char2()
        return rel

    def _check_char2(self) -> None:
        """特征 2: b21*u^2 + (b11+b22)*uv + b12*v^2 = a21"""
        B = self.B
        literal = (B.a21, B.a11 + B.a22, B.a12)
        if self.form != literal or self.rhs != self.A.a21:
            raise InternalInvariantViolation(
                "特征 2 的二次关系与消元结果不一致",
                {"form": [str(f) for f in self.form], "literal": [str(f) for f in literal]},
            )

    def context(self) -> QuadContext:
        return QuadContext.from_form(*self.form)

    def normalized_rhs(self, ctx: QuadContext) -> Poly:
        return ctx.transform.normalize_rhs(self.rhs)

    def divisibility_forms(self, ctx: QuadContext) -> List[DivisibilityForm]:
        """
        规范化坐标 (u_n, v) 上使 u, p, q 为多项式的条件, u_n = b21*u - s*v:
            b21 | u_n + s*v
            a21*b21 | (b11-a11)*u_n + ((b11-a11)*s + b12*b21)*v
            a21 | u_n + (s + b22 - a11)*v
        """
        A, B = self.A, self.B
        one = Poly.one(A.field)
        s = ctx.transform.shift
        a = B.a21
        diff = B.a11 - A.a11
        forms = [
            (one, s, a),
            (diff, diff * s + B.a12 * a, A.a21 * a),
            (one, s + B.a22 - A.a11, A.a21),
        ]
        # 模为常数的条件总成立
        return [f for f in forms if f[2].deg > 0]

    def reconstruct(self, u: Poly, v: Poly) -> Optional[Matrix2]:
        """由 (u, v) 恢复 p, q; 不整除时返回 None"""
        A, B = self.A, self.B
        p = ((B.a11 - A.a11) * u + B.a12 * v).exact_div(A.a21)
        q = (B.a21 * u + (B.a22 - A.a11) * v).exact_div(A.a21)
        if p is None or q is None:
            return None
        return Matrix2(u, p, v, q)


def alpha_classes(A: Matrix2) -> List[int]:
    """det U 的代表元: 特征 2 只需 1, 奇特征取 1 与一个非平方元"""
    F = A.field
    if F.p == 2:
        return [1]
    return [1, F.non_square()]


__all__ = ["NormalizedPair", "QuadraticRelation", "normalize_pair", "alpha_classes"]

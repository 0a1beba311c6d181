"""
穷举参照实现
只依赖有限域与多项式算术, 在有界次数内直接枚举, 用于与主求解器对拍。
枚举顺序按系数向量的字典序, 结果可复现。
"""
import logging
from typing import Any, List, Optional, Protocol, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..arithmetic.gf import FieldSpec
from ..arithmetic.poly import Poly, polys_up_to
from ..core.config import settings
from ..exceptions import BudgetExceeded, InvalidInput

logger = logging.getLogger(__name__)

Pair = Tuple[Poly, Poly]
Entries = Tuple[Poly, Poly, Poly, Poly]


class MatrixLike(Protocol):
    a11: Poly
    a12: Poly
    a21: Poly
    a22: Poly


class SearchBudget(BaseModel):
    """枚举预算: 各元素次数不超过 max_deg"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    max_deg: int = Field(ge=0)
    field: FieldSpec

    def space(self, slots: int) -> int:
        """slots 个多项式的枚举规模 q^(slots*(max_deg+1))"""
        return self.field.q ** (slots * (self.max_deg + 1))

    def require(self, slots: int) -> None:
        size = self.space(slots)
        ceiling = settings.ENUMERATION_CEILING
        if size > ceiling:
            raise BudgetExceeded(
                f"穷举规模 {size} 超过上限 {ceiling} (max_deg={self.max_deg}, q={self.field.q})",
                size=size,
                ceiling=ceiling,
            )

    def polys(self) -> List[Poly]:
        return list(polys_up_to(self.field, self.max_deg))


def _mul(X: Entries, Y: Entries) -> Entries:
    x11, x12, x21, x22 = X
    y11, y12, y21, y22 = Y
    return (
        x11 * y11 + x12 * y21,
        x11 * y12 + x12 * y22,
        x21 * y11 + x22 * y21,
        x21 * y12 + x22 * y22,
    )


def _entries(M: MatrixLike) -> Entries:
    return M.a11, M.a12, M.a21, M.a22


def _unit_det(U: Entries) -> bool:
    d = U[0] * U[3] - U[1] * U[2]
    return bool(d.coeffs) and d.deg == 0


def brute_decide_entries(A: MatrixLike, B: MatrixLike, budget: SearchBudget) -> Optional[Entries]:
    """
    第一个满足 U*A = B*U 且 det U ∈ F* 的 (u, p, v, q)
    按 u, v, p, q 的顺序嵌套枚举, 在确定 q 之前先检验只含 u, p, v 的 (1,1) 元。
    """
    budget.require(4)
    a, b = _entries(A), _entries(B)
    if a[0].field != budget.field or b[0].field != budget.field:
        raise InvalidInput("矩阵与预算不在同一个域上")
    a11, _, a21, _ = a
    b11, b12, _, _ = b
    polys = budget.polys()
    for u in polys:
        for v in polys:
            target = b11 * u + b12 * v - u * a11
            for p in polys:
                if p * a21 != target:
                    continue
                for q in polys:
                    U = (u, p, v, q)
                    if _mul(U, a) == _mul(b, U) and _unit_det(U):
                        return U
    return None


def brute_decide(A: Any, B: Any, budget: SearchBudget) -> Optional[Any]:
    """穷举共轭矩阵, 找到时返回与 A 同类型的矩阵"""
    U = brute_decide_entries(A, B, budget)
    if U is None:
        logger.debug(f"max_deg={budget.max_deg} 内没有共轭矩阵")
        return None
    return type(A)(*U)


def brute_norm_solutions(form: Tuple[Poly, Poly, Poly], d: Poly, budget: SearchBudget) -> List[Pair]:
    """a*u^2 + b*uv + c*v^2 = d 且 deg u, deg v <= max_deg 的全部解"""
    budget.require(2)
    a, b, c = form
    polys = budget.polys()
    out = []
    for u in polys:
        for v in polys:
            if a * u * u + b * u * v + c * v * v == d:
                out.append((u, v))
    return out


def brute_units(min_poly: Tuple[Poly, Poly], budget: SearchBudget) -> List[Pair]:
    """
    F[x][Δ] (Δ^2 + BΔ + C = 0) 中范数 u^2 - B*uv + C*v^2 = 1 的元素 (u, v)
    按 max(deg u, deg v) 排序
    """
    B, C = min_poly
    one = Poly.one(budget.field)
    solutions = brute_norm_solutions((one, -B, C), one, budget)
    return sorted(
        solutions, key=lambda uv: (max(uv[0].deg, uv[1].deg), uv[0].sort_key(), uv[1].sort_key())
    )


__all__ = [
    "SearchBudget",
    "brute_decide",
    "brute_decide_entries",
    "brute_norm_solutions",
    "brute_units",
]

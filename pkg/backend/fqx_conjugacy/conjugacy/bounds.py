"""
共轭矩阵的次数界
按情形给出精确整数: 三角/对角为 δ, 虚情形为 2δ,
一般情形特征 2 为 δ(q^(6δ)+2), 奇特征为 (1+q)δq^(7δ)
"""
import logging
from dataclasses import dataclass

from .matrix import Matrix2, max_degree
from .reduction import QuadraticRelation, normalize_pair
from ..algebra.quadring import QuadCase
from ..arithmetic.gf import FieldSpec

logger = logging.getLogger(__name__)

CASE_MISMATCH = "Mismatch"
CASE_IDENTICAL = "Identical"
CASE_SCALAR = "Scalar"
CASE_TRIANGULAR = "Triangular"
CASE_DIAGONAL = "Diagonal"


@dataclass(frozen=True)
class BoundReport:
    delta: int
    characteristic: int
    q: int
    case: str
    bound: int

    def describe(self) -> str:
        return (
            f"delta: {self.delta}\ncharacteristic: {self.characteristic}\nq: {self.q}\n"
            f"case: {self.case}\nbound: {self.bound}\n"
        )


def bound_for_case(field: FieldSpec, delta: int, case: str) -> int:
    q = field.q
    if case in (CASE_IDENTICAL, CASE_SCALAR, CASE_TRIANGULAR, CASE_DIAGONAL):
        return delta
    if case == QuadCase.IMAGINARY.value:
        return 2 * delta
    if field.p == 2:
        return delta * (q ** (6 * delta) + 2)
    return (1 + q) * delta * q ** (7 * delta)


def classify_pair(A: Matrix2, B: Matrix2) -> str:
    """约化之前的情形标签; 一般情形取 α = 1 时二次关系的分类"""
    if A.trace() != B.trace() or A.det() != B.det():
        return CASE_MISMATCH
    if A == B:
        return CASE_IDENTICAL
    if A.is_scalar() or B.is_scalar():
        return CASE_SCALAR
    if A.is_triangular() and B.is_triangular():
        return CASE_TRIANGULAR
    if A.is_diagonal() or B.is_diagonal():
        return CASE_DIAGONAL
    pair = normalize_pair(A, B)
    ctx = QuadraticRelation.build(pair.A, pair.B, 1).context()
    return ctx.case.value


def degree_bound(A: Matrix2, B: Matrix2) -> BoundReport:
    delta = max_degree(A, B)
    case = classify_pair(A, B)
    F = A.field
    report = BoundReport(
        delta=delta,
        characteristic=F.p,
        q=F.q,
        case=case,
        bound=bound_for_case(F, delta, case),
    )
    logger.debug(f"次数界: δ={delta}, 情形 {case}, 界 {report.bound}")
    return report


__all__ = [
    "BoundReport",
    "bound_for_case",
    "classify_pair",
    "degree_bound",
    "CASE_MISMATCH",
    "CASE_IDENTICAL",
    "CASE_SCALAR",
    "CASE_TRIANGULAR",
    "CASE_DIAGONAL",
]

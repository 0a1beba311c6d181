"""
共轭判定的证书
Conjugate 证书总带有见证矩阵 U, 构造时重新验证 U*A = B*U 与 det U ∈ F*
"""
import logging
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Any, Dict, List, Optional

from .matrix import Matrix2, parse_matrix
from ..arithmetic.gf import FieldSpec
from ..exceptions import InternalInvariantViolation, ParseError

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    CONJUGATE = "Conjugate"
    NOT_CONJUGATE = "NotConjugate"


class Reason(str, Enum):
    """否定结论的原因"""
    TRACE_MISMATCH = "TraceMismatch"
    DET_MISMATCH = "DetMismatch"
    DIAGONAL_CRITERION_FAILED = "DiagonalCriterionFailed"
    SOLUTION_SET_EXHAUSTED = "SolutionSetExhausted"


def verify_witness(A: Matrix2, B: Matrix2, U: Matrix2) -> bool:
    """U*A = B*U 且 det U ∈ F*"""
    return U * A == B * U and U.is_invertible()


@dataclass
class Certificate:
    A: Matrix2
    B: Matrix2
    verdict: Verdict
    witness: Optional[Matrix2] = None
    reason: Optional[Reason] = None
    case: str = ""
    bound: Optional[int] = None
    transcript: Dict[str, Any] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.verdict == Verdict.CONJUGATE:
            if self.witness is None or not verify_witness(self.A, self.B, self.witness):
                logger.error(f"见证矩阵验证失败: A={self.A}, B={self.B}, U={self.witness}")
                raise InternalInvariantViolation(
                    "Conjugate 证书的见证矩阵没有通过验证",
                    {"A": str(self.A), "B": str(self.B), "U": str(self.witness), **self.transcript},
                )
        elif self.reason is None:
            raise InternalInvariantViolation("NotConjugate 证书缺少原因", dict(self.transcript))

    @property
    def is_conjugate(self) -> bool:
        return self.verdict == Verdict.CONJUGATE

    @property
    def witness_degree(self) -> Optional[int]:
        if self.witness is None:
            return None
        return int(max(self.witness.degree, 0))

    def serialize(self, emit_witness: bool = True) -> str:
        """逐行文本, 对固定输入逐字节稳定"""
        lines: List[str] = [f"verdict: {self.verdict.value}"]
        if self.reason is not None:
            lines.append(f"reason: {self.reason.value}")
        if self.witness is not None and emit_witness:
            lines.append(f"witness: {self.witness}")
            lines.append(f"det: {self.witness.det()}")
            lines.append("checks: U*A = B*U; det U in F*")
        lines.append(f"case: {self.case or '-'}")
        lines.append(f"bound: {self.bound if self.bound is not None else '-'}")
        return "\n".join(lines) + "\n"


def read_witness(field: FieldSpec, text: str) -> Matrix2:
    """从证书文本中读出 witness 行"""
    for number, line in enumerate(text.splitlines(), start=1):
        key, sep, value = line.partition(":")
        if sep and key.strip() == "witness":
            try:
                return parse_matrix(field, value.strip())
            except ParseError as e:
                raise ParseError(e.detail, line=number, column=len(key) + 2 + e.column) from e
    raise ParseError("证书中没有 witness 行")


__all__ = ["Verdict", "Reason", "Certificate", "verify_witness", "read_witness"]

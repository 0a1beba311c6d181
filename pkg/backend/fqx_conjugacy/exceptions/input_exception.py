"""
输入异常模块
输入验证、解析与预算相关的错误, 对应退出码 2
"""
from typing import Any, Dict, Optional

from .base_exception import SolverBaseException


class InvalidInput(SolverBaseException):
    """输入不满足前置条件"""
    def __init__(
        self,
        message: str = "输入无效",
        errors: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message=message, code=2, data={"errors": errors or {}})


class ParseError(InvalidInput):
    """问题文件或多项式文本解析失败"""
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(
            message=f"第{line}行第{column}列: {message}",
            errors={"line": line, "column": column}
        )
        self.detail = message
        self.line = line
        self.column = column


class Unsupported(SolverBaseException):
    """输入超出支持范围(如特征 2 的 Pell 方程, 非半单矩阵)"""
    def __init__(self, message: str = "不支持的输入"):
        super().__init__(message=message, code=2)


class BudgetExceeded(SolverBaseException):
    """枚举规模超过配置的上限"""
    def __init__(self, message: str = "枚举规模超过上限", size: int = 0, ceiling: int = 0):
        super().__init__(message=message, code=2, data={"size": size, "ceiling": ceiling})


__all__ = [
    "InvalidInput",
    "ParseError",
    "Unsupported",
    "BudgetExceeded",
]

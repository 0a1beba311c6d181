"""
算术异常模块
有限域、多项式与 Laurent 级数运算中的错误
"""
from typing import Any, Optional

from .base_exception import SolverBaseException


class DivisionByZero(SolverBaseException):
    """除以零(域元素或零多项式)"""
    def __init__(self, message: str = "除数为零"):
        super().__init__(message=message, code=3)


class PrecisionExhausted(SolverBaseException):
    """截断级数的精度不足"""
    def __init__(self, message: str = "级数精度不足", needed: Optional[int] = None):
        super().__init__(message=message, code=3, data={"needed": needed})


class RationalCase(SolverBaseException):
    """
    二次方程存在多项式根
    调用方应转入有理情形求解器
    """
    def __init__(self, root: Any, message: str = "方程存在多项式根"):
        super().__init__(message=message, code=3, data={"root": str(root)})
        self.root = root


__all__ = [
    "DivisionByZero",
    "PrecisionExhausted",
    "RationalCase",
]

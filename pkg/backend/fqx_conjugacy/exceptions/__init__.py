"""
异常处理模块
"""
from .base_exception import SolverBaseException, InternalInvariantViolation
from .arithmetic_exception import DivisionByZero, PrecisionExhausted, RationalCase
from .input_exception import InvalidInput, ParseError, Unsupported, BudgetExceeded

__all__ = [
    "SolverBaseException",
    "InternalInvariantViolation",
    "DivisionByZero",
    "PrecisionExhausted",
    "RationalCase",
    "InvalidInput",
    "ParseError",
    "Unsupported",
    "BudgetExceeded",
]

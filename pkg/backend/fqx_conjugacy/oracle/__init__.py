"""
穷举参照实现, 仅用于测试与自检
"""
from .brute_force import SearchBudget, brute_decide, brute_norm_solutions, brute_units

__all__ = ["SearchBudget", "brute_decide", "brute_norm_solutions", "brute_units"]

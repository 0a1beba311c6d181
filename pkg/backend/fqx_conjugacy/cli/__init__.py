"""
命令行前端: 问题文件、报告格式与自检
"""
from .main import build_parser, main, run
from .problem import ProblemFile, load_problem, parse_problem

__all__ = ["build_parser", "main", "run", "ProblemFile", "load_problem", "parse_problem"]

"""
2x2 多项式矩阵的共轭判定与中心化子
"""
from .matrix import Matrix2, parse_matrix, format_matrix, max_degree
from .certificate import Certificate, Reason, Verdict, verify_witness, read_witness
from .bounds import BoundReport, degree_bound, bound_for_case
from .decide import decide
from .centralizer import CentralizerReport, centralizer_generator

__all__ = [
    "Matrix2",
    "parse_matrix",
    "format_matrix",
    "max_degree",
    "Certificate",
    "Reason",
    "Verdict",
    "verify_witness",
    "read_witness",
    "BoundReport",
    "degree_bound",
    "bound_for_case",
    "decide",
    "CentralizerReport",
    "centralizer_generator",
]

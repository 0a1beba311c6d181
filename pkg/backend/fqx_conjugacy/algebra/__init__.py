"""
二次扩环上的代数: 环与分类、连分数、单位群、范数方程
"""
from .quadring import QuadCase, ImaginaryKind, QuadContext, QuadInt, classify, deg_imaginary
from .cfrac import Surd, Convergents, PeriodicExpansion, cf_step, expand_periodic, period_bound
from .units import UnitGroupDescription, fundamental_unit, nontrivial_unit, pell_fundamental
from .normsolver import (
    LineFamily,
    NormSolutionReport,
    SolutionFamily,
    filtered_solutions,
    residue_period,
    solve_imaginary,
    solve_norm,
    solve_rational,
    solve_real_base,
)

__all__ = [
    "QuadCase",
    "ImaginaryKind",
    "QuadContext",
    "QuadInt",
    "classify",
    "deg_imaginary",
    "Surd",
    "Convergents",
    "PeriodicExpansion",
    "cf_step",
    "expand_periodic",
    "period_bound",
    "UnitGroupDescription",
    "fundamental_unit",
    "nontrivial_unit",
    "pell_fundamental",
    "LineFamily",
    "NormSolutionReport",
    "SolutionFamily",
    "filtered_solutions",
    "residue_period",
    "solve_imaginary",
    "solve_norm",
    "solve_rational",
    "solve_real_base",
]

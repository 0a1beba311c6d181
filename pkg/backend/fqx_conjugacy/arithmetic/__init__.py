"""
精确算术: 有限域、多项式、Laurent 级数与 F_p 线性代数
"""
from .gf import FieldSpec, FieldElement, field_sqrt, field_enumerate, is_square
from .poly import (
    NEG_INF,
    Poly,
    parse_poly,
    format_poly,
    poly_gcd,
    poly_xgcd,
    poly_lcm,
    poly_sqrt,
    poly_factor,
    poly_divisors,
    monic_polys,
    polys_up_to,
)
from .laurent import LaurentSeries, quadratic_series_root, quadratic_roots, with_precision
from .linalg import solve_char2_quadratic

__all__ = [
    "FieldSpec",
    "FieldElement",
    "field_sqrt",
    "field_enumerate",
    "is_square",
    "NEG_INF",
    "Poly",
    "parse_poly",
    "format_poly",
    "poly_gcd",
    "poly_xgcd",
    "poly_lcm",
    "poly_sqrt",
    "poly_factor",
    "poly_divisors",
    "monic_polys",
    "polys_up_to",
    "LaurentSeries",
    "quadratic_series_root",
    "quadratic_roots",
    "with_precision",
    "solve_char2_quadratic",
]

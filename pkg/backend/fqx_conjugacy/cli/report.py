"""
命令行输出格式
所有输出都是逐行的 `键: 值` 文本, 不含时间戳, 对固定输入逐字节稳定
"""
from typing import List, Optional, Tuple

from ..algebra.normsolver import NormSolutionReport
from ..algebra.quadring import QuadContext
from ..algebra.units import UnitGroupDescription
from ..arithmetic.poly import Poly
from ..conjugacy.bounds import BoundReport
from ..conjugacy.centralizer import CentralizerReport


def _lines(pairs: List[Tuple[str, object]]) -> str:
    return "".join(f"{key}: {value}\n" for key, value in pairs)


def format_bound(report: BoundReport) -> str:
    return report.describe()


def format_centralizer(report: CentralizerReport) -> str:
    rows: List[Tuple[str, object]] = [("case", report.case.value), ("primitive", report.primitive)]
    if report.generator is not None:
        rows += [
            ("generator", report.generator),
            ("det", report.generator.det()),
            ("degree", int(report.generator.degree)),
        ]
    else:
        rows.append(("generator", "-"))
    rows.append(("description", report.description))
    return _lines(rows)


def format_pell(D: Poly, u: Poly, v: Poly) -> str:
    return _lines([("D", D), ("u", u), ("v", v), ("check", "u^2 - D*v^2 = 1")])


def format_units(ctx: QuadContext, unit: Optional[UnitGroupDescription],
                 original: Optional[Tuple[Poly, Poly]] = None) -> str:
    rows: List[Tuple[str, object]] = [("case", ctx.describe())]
    if unit is None:
        rows.append(("units", "F* (finite)"))
        return _lines(rows)
    u, v = original or (unit.generator.u, unit.generator.v)
    rows += [
        ("generator", f"u = {u}, v = {v}"),
        ("norm", 1),
        ("degree_k", unit.degree_k),
        ("period", unit.expansion_period),
    ]
    return _lines(rows)


def format_norm(report: NormSolutionReport) -> str:
    rows: List[Tuple[str, object]] = [("case", report.ctx.describe()), ("d", report.d)]
    rows.append(("solutions", len(report.solutions)))
    for u, v in report.solutions:
        rows.append(("solution", f"u = {u}, v = {v}"))
    for family in report.families:
        rows.append(("family", family))
    if report.real_family is not None:
        rows.append(("unit", report.real_family.generator))
        rows.append(("unit_degree", report.real_family.unit.degree_k))
    return _lines(rows)


def format_verify(ok: bool) -> str:
    return _lines([("verified", "yes" if ok else "no"), ("checks", "U*A = B*U; det U in F*")])


__all__ = [
    "format_bound",
    "format_centralizer",
    "format_pell",
    "format_units",
    "format_norm",
    "format_verify",
]

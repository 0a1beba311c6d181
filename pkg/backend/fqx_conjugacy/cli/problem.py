"""
问题文件
第一行(忽略空行与 # 注释)为域说明 `field p=<素数> [k=<次数>] [modulus=<关于 a 的多项式>]`,
其后每行一个 `名字 = 值`: 矩阵 A, B 或多项式 D, b, c, d。
"""
import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Dict, List, Optional, Union

from ..arithmetic.gf import FieldSpec
from ..arithmetic.poly import Poly, parse_poly
from ..conjugacy.matrix import Matrix2, parse_matrix
from ..exceptions import InvalidInput, ParseError

MATRIX_KEYS = ("A", "B")
POLY_KEYS = ("D", "b", "c", "d")

_HEADER_ITEM = re.compile(r"(?P<key>[a-z]+)=(?P<value>\S+)")


@dataclass
class ProblemFile:
    field: FieldSpec
    matrices: Dict[str, Matrix2] = dc_field(default_factory=dict)
    polys: Dict[str, Poly] = dc_field(default_factory=dict)
    source: str = "<text>"

    def matrix(self, name: str) -> Matrix2:
        if name not in self.matrices:
            raise InvalidInput(f"{self.source}: 缺少矩阵 {name}")
        return self.matrices[name]

    def poly(self, name: str, default: Optional[Poly] = None) -> Poly:
        if name in self.polys:
            return self.polys[name]
        if default is not None:
            return default
        raise InvalidInput(f"{self.source}: 缺少多项式 {name}")

    def has(self, name: str) -> bool:
        return name in self.matrices or name in self.polys


def _parse_modulus(text: str, p: int, line: int, column: int) -> List[int]:
    """a^2+a+1 -> [1, 1, 1] (升幂)"""
    coeffs: Dict[int, int] = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
        m = re.fullmatch(r"(?:(\d+)\*?)?a(?:\^(\d+))?|(\d+)", body)
        if m is None:
            raise ParseError(f"无法解析模多项式 '{text}'", line=line, column=column)
        if m.group(3) is not None:
            coef, exp = int(m.group(3)), 0
        else:
            coef = int(m.group(1)) if m.group(1) else 1
            exp = int(m.group(2)) if m.group(2) else 1
        if sign == "-":
            coef = -coef
        coeffs[exp] = (coeffs.get(exp, 0) + coef) % p
    top = max(coeffs) if coeffs else 0
    return [coeffs.get(i, 0) for i in range(top + 1)]


def parse_header(text: str, line: int = 1) -> FieldSpec:
    body = text.strip()
    if not body.startswith("field"):
        raise ParseError("第一行必须是域说明 'field p=...'", line=line, column=1)
    items: Dict[str, str] = {}
    offset = text.index("field") + len("field")
    for m in _HEADER_ITEM.finditer(text, offset):
        items[m.group("key")] = m.group("value")
    leftover = _HEADER_ITEM.sub("", text[offset:]).strip()
    if leftover:
        token = leftover.split()[0]
        raise ParseError(f"域说明中无法识别 '{token}'", line=line, column=text.index(token) + 1)
    unknown = set(items) - {"p", "k", "modulus"}
    if unknown:
        key = sorted(unknown)[0]
        raise ParseError(f"未知的域参数 '{key}'", line=line, column=text.index(key) + 1)
    if "p" not in items:
        raise ParseError("域说明缺少 p", line=line, column=1)
    try:
        p = int(items["p"])
        k = int(items.get("k", "1"))
    except ValueError as e:
        raise ParseError(f"p 与 k 必须是整数: {e}", line=line, column=offset + 1) from e
    modulus = None
    if "modulus" in items:
        column = text.index("modulus=") + len("modulus=") + 1
        modulus = _parse_modulus(items["modulus"], p, line, column)
    try:
        return FieldSpec.create(p, k, modulus)
    except InvalidInput as e:
        raise ParseError(e.message, line=line, column=1) from e


def parse_problem(text: str, source: str = "<text>") -> ProblemFile:
    problem: Optional[ProblemFile] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if problem is None:
            problem = ProblemFile(field=parse_header(line, number), source=source)
            continue
        key, sep, value = line.partition("=")
        name = key.strip()
        if not sep:
            raise ParseError(f"应为 '名字 = 值', 得到 '{line.strip()}'", line=number, column=1)
        column = len(key) + 2 + (len(value) - len(value.lstrip()))
        if problem.has(name):
            raise ParseError(f"重复定义 {name}", line=number, column=line.index(name) + 1)
        try:
            if name in MATRIX_KEYS:
                problem.matrices[name] = parse_matrix(problem.field, value.strip())
            elif name in POLY_KEYS:
                problem.polys[name] = parse_poly(problem.field, value.strip())
            else:
                raise ParseError(f"未知的键 '{name}'", column=1)
        except ParseError as e:
            start = column if name in MATRIX_KEYS + POLY_KEYS else line.index(name) + 1
            raise ParseError(e.detail, line=number, column=start + max(e.column - 1, 0)) from e
    if problem is None:
        raise ParseError("问题文件为空", line=1, column=1)
    return problem


def load_problem(path: Union[str, Path]) -> ProblemFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInput(f"无法读取 {path}: {e}") from e
    return parse_problem(text, source=str(path))


__all__ = ["ProblemFile", "parse_problem", "parse_header", "load_problem", "MATRIX_KEYS", "POLY_KEYS"]

"""
F_p 线性代数
基于 numpy 整数数组的模 p 行约化、特解与核, 以及多项式系数向量上 F_p-线性映射的求解
"""
import itertools
import logging
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .gf import FieldSpec
from .poly import NEG_INF, Degree, Poly
from ..core.config import settings
from ..exceptions import BudgetExceeded

logger = logging.getLogger(__name__)


def row_reduce(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """模 p 约化行阶梯形, 返回 (矩阵, 主元列)"""
    A = np.array(matrix, dtype=np.int64) % p
    if A.shape[0] == 0:
        return A, []
    rows, cols = A.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = (A[r] * pow(int(A[r, c]), p - 2, p)) % p
        others = [j for j in np.nonzero(A[:, c])[0] if j != r]
        if others:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def solve_mod_p(A: np.ndarray, b: np.ndarray, p: int) -> Optional[np.ndarray]:
    """求 A x = b 的一个特解, 无解返回 None"""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    cols = A.shape[1]
    R, pivots = row_reduce(np.hstack([A, b]), p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for row, c in enumerate(pivots):
        x[c] = R[row, -1]
    return x


def kernel_basis(A: np.ndarray, p: int) -> List[np.ndarray]:
    """A x = 0 的解空间基"""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, pivots = row_reduce(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for row, c in enumerate(pivots):
            v[c] = (-R[row, f]) % p
        basis.append(v)
    return basis


def enumerate_affine(
    particular: np.ndarray,
    basis: Sequence[np.ndarray],
    p: int,
    ceiling: Optional[int] = None,
) -> Iterator[np.ndarray]:
    """枚举 particular + span(basis) 的全部向量"""
    ceiling = ceiling if ceiling is not None else settings.ENUMERATION_CEILING
    size = p ** len(basis)
    if size > ceiling:
        raise BudgetExceeded(f"解空间规模 {p}^{len(basis)} 超过上限 {ceiling}", size=size, ceiling=ceiling)
    for combo in itertools.product(range(p), repeat=len(basis)):
        v = particular.copy()
        for c, b in zip(combo, basis):
            if c:
                v = (v + c * b) % p
        yield v


# -------------------------------------------------------------------- 多项式 <-> 向量


def poly_to_vector(f: Poly, n_coeffs: int) -> np.ndarray:
    """前 n_coeffs 个系数按 F_p 坐标展开"""
    F = f.field
    out = np.zeros(n_coeffs * F.k, dtype=np.int64)
    for i, c in enumerate(f.coeffs[:n_coeffs]):
        out[i * F.k:(i + 1) * F.k] = F.coords(c)
    return out


def vector_to_poly(field: FieldSpec, vec: Sequence[int]) -> Poly:
    k = field.k
    values = [int(x) for x in vec]
    return Poly(field, tuple(field.from_coords(values[i:i + k]) for i in range(0, len(values), k)))


def basis_polys(field: FieldSpec, max_deg: int) -> List[Poly]:
    """次数 <= max_deg 的多项式作为 F_p 向量空间的基"""
    out = []
    for i in range(max_deg + 1):
        for j in range(field.k):
            out.append(Poly.monomial(field, field.p ** j, i))
    return out


def linear_map_matrix(
    field: FieldSpec,
    func: Callable[[Poly], Sequence[Poly]],
    in_degs: Sequence[int],
    out_len: int,
) -> np.ndarray:
    """
    F_p-线性映射的矩阵
    输入是若干多项式(第 i 个次数 <= in_degs[i]), 输出是若干多项式,
    每个输出多项式取前 out_len 个系数。
    """
    columns = []
    for slot, deg in enumerate(in_degs):
        for b in basis_polys(field, deg):
            args = [Poly.zero(field) for _ in in_degs]
            args[slot] = b
            outputs = func(*args) if len(in_degs) > 1 else func(args[0])
            columns.append(np.concatenate([poly_to_vector(o, out_len) for o in outputs]))
    if not columns:
        return np.zeros((0, 0), dtype=np.int64)
    return np.stack(columns, axis=1)


def split_vector(field: FieldSpec, vec: np.ndarray, in_degs: Sequence[int]) -> List[Poly]:
    out = []
    pos = 0
    for deg in in_degs:
        width = (deg + 1) * field.k
        out.append(vector_to_poly(field, vec[pos:pos + width]))
        pos += width
    return out


# -------------------------------------------------------------------- 特征 2 二次方程


def solve_char2_quadratic(beta: Poly, rhs: Poly, max_deg: Degree) -> List[Poly]:
    """
    特征 2 下求 deg u <= max_deg 且 u^2 + beta*u = rhs 的全部多项式 u
    u -> u^2 + beta*u 是 F_2-线性映射, 核为 {0, beta}。
    """
    F = beta.field
    if max_deg == NEG_INF or max_deg < 0:
        return [Poly.zero(F)] if not rhs.coeffs else []
    n = int(max_deg)
    out_len = max(2 * n, n + int(beta.deg) if beta.coeffs else 0, int(rhs.deg) if rhs.coeffs else 0) + 1
    if rhs.coeffs and rhs.deg >= out_len:
        return []
    M = linear_map_matrix(F, lambda u: [u * u + beta * u], [n], out_len)
    target = poly_to_vector(rhs, out_len)
    x = solve_mod_p(M, target, 2)
    if x is None:
        return []
    basis = kernel_basis(M, 2)
    solutions = []
    for v in enumerate_affine(x, basis, 2):
        u = vector_to_poly(F, v)
        if u * u + beta * u == rhs:
            solutions.append(u)
    return sorted(solutions, key=lambda p: p.sort_key())


__all__ = [
    "row_reduce",
    "solve_mod_p",
    "kernel_basis",
    "enumerate_affine",
    "poly_to_vector",
    "vector_to_poly",
    "basis_polys",
    "linear_map_matrix",
    "split_vector",
    "solve_char2_quadratic",
]

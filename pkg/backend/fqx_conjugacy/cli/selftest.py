"""
自检语料
固定的小规模实例, 随机往返实例与穷举对拍
budget 按比例控制随机往返与对拍的实例数, budget = 10 时达到完整规模
(每个域 500 对往返, 10^4 对对拍)。
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..algebra.quadring import QuadCase, classify
from ..algebra.units import fundamental_unit, pell_fundamental
from ..arithmetic.gf import FieldSpec
from ..arithmetic.poly import Poly, parse_poly, polys_up_to
from ..conjugacy.bounds import bound_for_case
from ..conjugacy.centralizer import centralizer_generator
from ..conjugacy.certificate import Certificate, Reason, Verdict, verify_witness
from ..conjugacy.decide import decide
from ..conjugacy.matrix import Matrix2, max_degree, parse_matrix
from ..oracle.brute_force import SearchBudget, brute_decide, brute_units

logger = logging.getLogger(__name__)

SEED = 20240521

ROUND_TRIP_FIELDS = ((2, 1), (3, 1), (2, 2))
ROUND_TRIP_PAIRS = 500
ROUND_TRIP_PER_BUDGET = 50
ORACLE_PAIRS = 10_000
ORACLE_PAIRS_PER_BUDGET = 1000
ORACLE_MAX_DEG = 3


@dataclass(frozen=True)
class SelftestResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


# -------------------------------------------------------------------- 随机实例


def random_poly(rng: np.random.Generator, field: FieldSpec, max_deg: int) -> Poly:
    coeffs = rng.integers(0, field.q, size=max_deg + 1)
    return Poly(field, tuple(int(c) for c in coeffs))


def random_matrix(rng: np.random.Generator, field: FieldSpec, max_deg: int) -> Matrix2:
    return Matrix2(*(random_poly(rng, field, max_deg) for _ in range(4)))


def elementary(rng: np.random.Generator, field: FieldSpec, max_deg: int) -> Matrix2:
    """初等矩阵、置换矩阵或对角可逆矩阵之一"""
    one, zero = Poly.one(field), Poly.zero(field)
    kind = int(rng.integers(0, 4))
    if kind == 0:
        return Matrix2(one, random_poly(rng, field, max_deg), zero, one)
    if kind == 1:
        return Matrix2(one, zero, random_poly(rng, field, max_deg), one)
    if kind == 2:
        return Matrix2.swap(field)
    lam = int(rng.integers(1, field.q))
    return Matrix2(Poly.const(field, lam), zero, zero, one)


def random_unimodular(
    rng: np.random.Generator, field: FieldSpec, steps: int, max_deg: int
) -> Matrix2:
    U = Matrix2.identity(field)
    for _ in range(steps):
        U = U * elementary(rng, field, max_deg)
    return U


# -------------------------------------------------------------------- 语料


def _worked_pair(budget: int) -> SelftestResult:
    F = FieldSpec.create(2)
    A = parse_matrix(F, "[[0,1],[x,0]]")
    B = parse_matrix(F, "[[x,x+1],[x,x]]")
    cert = decide(A, B)
    found = brute_decide(A, B, SearchBudget(max_deg=0, field=F))
    ok = cert.is_conjugate and found is not None and verify_witness(A, B, found)
    return SelftestResult("decide-worked-pair", ok, f"witness {cert.witness}")


def _trace_mismatch(budget: int) -> SelftestResult:
    F = FieldSpec.create(2)
    cert = decide(parse_matrix(F, "[[1,0],[0,0]]"), parse_matrix(F, "[[0,0],[0,0]]"))
    ok = cert.verdict == Verdict.NOT_CONJUGATE and cert.reason == Reason.TRACE_MISMATCH
    return SelftestResult("trace-mismatch", ok)


def _pell(budget: int) -> SelftestResult:
    F = FieldSpec.create(3)
    D = parse_poly(F, "x^2+1")
    u, v = pell_fundamental(D)
    expected_u, expected_v = parse_poly(F, "x^2+2"), parse_poly(F, "x")
    ok = (
        u * u - D * v * v == Poly.one(F)
        and u in (expected_u, -expected_u)
        and v in (expected_v, -expected_v)
    )
    return SelftestResult("pell-x2+1", ok, f"u = {u}, v = {v}")


def _char2_units(budget: int) -> SelftestResult:
    F = FieldSpec.create(2)
    ctx = classify(parse_poly(F, "x"), Poly.one(F))
    unit = fundamental_unit(ctx)
    found = brute_units(ctx.min_poly, SearchBudget(max_deg=ORACLE_MAX_DEG, field=F))
    g = unit.generator
    ok = unit.degree_k == 1 and g.norm() == Poly.one(F) and (g.u, g.v) in found
    return SelftestResult("char2-units", ok, f"generator {g}")


def _centralizer(budget: int) -> SelftestResult:
    F = FieldSpec.create(2)
    A = parse_matrix(F, "[[0,1],[1,x]]")
    report = centralizer_generator(A)
    U = report.generator
    ok = U is not None and U * A == A * U and U.is_invertible() and U.degree == 1
    finite = centralizer_generator(parse_matrix(F, "[[0,1],[x,0]]"))
    ok = ok and finite.generator is None and finite.case == QuadCase.IMAGINARY
    return SelftestResult("centralizer", ok, f"generator {U}")


def _bounds(budget: int) -> SelftestResult:
    F2, F3 = FieldSpec.create(2), FieldSpec.create(3)
    values = (
        bound_for_case(F2, 1, QuadCase.IMAGINARY.value),
        bound_for_case(F2, 1, QuadCase.REAL.value),
        bound_for_case(F3, 1, QuadCase.REAL.value),
    )
    return SelftestResult("bounds", values == (2, 66, 8748), f"{values}")


def _general_bound(A: Matrix2, B: Matrix2) -> int:
    """按特征取的一般次数界 δ(q^{6δ}+2) 或 (1+q)δq^{7δ}"""
    return bound_for_case(A.field, max_degree(A, B), QuadCase.REAL.value)


def _audit(cert: Certificate) -> Optional[str]:
    """复核共轭证书的见证并检查次数界, 通过时返回 None"""
    A, B, U = cert.A, cert.B, cert.witness
    if U is None or not verify_witness(A, B, U):
        return "见证未通过复核"
    limit = _general_bound(A, B)
    if U.degree > limit:
        return f"见证次数 {U.degree} 超过界 {limit}"
    return None


def _round_trip(budget: int) -> SelftestResult:
    """q = 2, 3, 4 上次数 <= 2 的 A 与 U*A*U^-1, U 是至多 4 个初等矩阵的乘积"""
    rng = np.random.default_rng(SEED)
    count = min(ROUND_TRIP_PAIRS, ROUND_TRIP_PER_BUDGET * budget)
    failures = top = 0
    for p, k in ROUND_TRIP_FIELDS:
        F = FieldSpec.create(p, k)
        for _ in range(count):
            A = random_matrix(rng, F, 2)
            U = random_unimodular(rng, F, int(rng.integers(1, 5)), 2)
            B = A.conjugate_by(U)
            cert = decide(A, B)
            problem = _audit(cert) if cert.is_conjugate else "判为不共轭"
            if problem:
                failures += 1
                logger.error(f"往返失败 ({problem}): A={A}, U={U}, B={B}")
            else:
                top = max(top, int(cert.witness_degree))
    total = count * len(ROUND_TRIP_FIELDS)
    return SelftestResult("round-trip", failures == 0, f"{total} 对, 失败 {failures}, 最大见证次数 {top}")


def oracle_pairs(rng: np.random.Generator, limit: int) -> List[Tuple[Matrix2, Matrix2]]:
    """F_2 上次数 <= 1 且迹与行列式相同的全部有序对, 超过 limit 时无放回抽样"""
    F = FieldSpec.create(2)
    polys = list(polys_up_to(F, 1))
    groups: Dict[Tuple[Poly, Poly], List[Matrix2]] = {}
    for entries in product(polys, repeat=4):
        M = Matrix2(*entries)
        groups.setdefault((M.trace(), M.det()), []).append(M)
    pairs = [(A, B) for members in groups.values() for A in members for B in members if A != B]
    if len(pairs) > limit:
        chosen = rng.choice(len(pairs), size=limit, replace=False)
        pairs = [pairs[int(i)] for i in sorted(chosen)]
    return pairs


def _oracle_agreement(budget: int) -> SelftestResult:
    """穷举到 deg U <= 3: 穷举找到的求解器必须找到, 求解器找到的必须通过复核"""
    F = FieldSpec.create(2)
    rng = np.random.default_rng(SEED + 1)
    pairs = oracle_pairs(rng, min(ORACLE_PAIRS, ORACLE_PAIRS_PER_BUDGET * budget))
    oracle_budget = SearchBudget(max_deg=ORACLE_MAX_DEG, field=F)
    missed = unverified = top = 0
    for A, B in pairs:
        cert = decide(A, B)
        if cert.is_conjugate:
            problem = _audit(cert)
            if problem:
                unverified += 1
                logger.error(f"求解器的见证有误 ({problem}): A={A}, B={B}, U={cert.witness}")
            else:
                top = max(top, int(cert.witness_degree))
            continue
        found = brute_decide(A, B, oracle_budget)
        if found is not None:
            missed += 1
            logger.error(f"穷举找到共轭矩阵而求解器没有: A={A}, B={B}, U={found}")
    detail = f"{len(pairs)} 对, 漏判 {missed}, 复核失败 {unverified}, 最大见证次数 {top}"
    return SelftestResult("oracle-agreement", missed == 0 and unverified == 0, detail)


CORPUS: List[Tuple[str, Callable[[int], SelftestResult]]] = [
    ("decide-worked-pair", _worked_pair),
    ("trace-mismatch", _trace_mismatch),
    ("pell-x2+1", _pell),
    ("char2-units", _char2_units),
    ("centralizer", _centralizer),
    ("bounds", _bounds),
    ("round-trip", _round_trip),
    ("oracle-agreement", _oracle_agreement),
]


def run_selftest(budget: int, only: Optional[List[str]] = None) -> List[SelftestResult]:
    results = []
    for name, check in CORPUS:
        if only and name not in only:
            continue
        try:
            result = check(budget)
        except Exception as e:  # 自检项的任何异常都记为失败
            logger.error(f"自检 {name} 抛出异常: {e!r}")
            result = SelftestResult(name, False, f"{type(e).__name__}: {e}")
        logger.info(result.line())
        results.append(result)
    return results


__all__ = [
    "SelftestResult",
    "CORPUS",
    "run_selftest",
    "random_poly",
    "random_matrix",
    "random_unimodular",
    "oracle_pairs",
]

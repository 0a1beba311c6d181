"""
Laurent 级数测试
截断精度的传播、求逆、二次方程级数根的剥离与精度加倍
"""
import numpy as np
import pytest

from backend.fqx_conjugacy.arithmetic.laurent import (
    LaurentSeries,
    first_difference,
    quadratic_roots,
    quadratic_series_root,
    with_precision,
)
from backend.fqx_conjugacy.arithmetic.linalg import (
    enumerate_affine,
    kernel_basis,
    solve_char2_quadratic,
    solve_mod_p,
)
from backend.fqx_conjugacy.arithmetic.poly import Poly
from backend.fqx_conjugacy.exceptions import (
    BudgetExceeded,
    InvalidInput,
    PrecisionExhausted,
    RationalCase,
)


@pytest.mark.unit
def test_inverse_of_polynomial(F2, P):
    f = LaurentSeries.from_poly(P(F2, "x+1"))
    product = f.inverse() * f
    assert product.top == 0
    assert product.coeff(0) == 1
    assert all(product.coeff(e) == 0 for e in range(int(product.floor), 0))


@pytest.mark.unit
def test_monomial_inverse_is_exact(F3):
    m = LaurentSeries.monomial(F3, 2, 3)
    inv = m.inverse()
    assert inv.is_exact
    assert inv.top == -3 and inv.lc == 2


@pytest.mark.unit
def test_truncated_zero_has_unknown_degree(F3):
    z = LaurentSeries.zero(F3, floor=-5)
    with pytest.raises(PrecisionExhausted):
        _ = z.degree
    with pytest.raises(PrecisionExhausted):
        z.coeff(-6)


@pytest.mark.unit
def test_polynomial_part_needs_constant_term(F3, P):
    s = LaurentSeries.from_poly(P(F3, "x^3+x+1")).truncate(1)
    with pytest.raises(PrecisionExhausted):
        s.polynomial_part()
    exact = LaurentSeries.from_poly(P(F3, "x^3+x+1")) + LaurentSeries.monomial(F3, 1, -2)
    assert exact.polynomial_part() == P(F3, "x^3+x+1")


@pytest.mark.unit
def test_square_root_series(F3, P):
    """t^2 = x^2 + 1 的根在已知精度内平方回 x^2 + 1"""
    c = P(F3, "x^2+1")
    root = quadratic_series_root(Poly.zero(F3), c)
    assert root is not None
    assert root.top == 1
    assert first_difference(root * root, LaurentSeries.from_poly(c)) is None


@pytest.mark.unit
def test_roots_sum_to_minus_b(F2, P):
    b, c = P(F2, "x"), P(F2, "1")
    roots = quadratic_roots(b, c)
    assert roots is not None
    r1, r2 = roots
    assert first_difference(r1 + r2, LaurentSeries.from_poly(b)) is None
    assert sorted([r1.top, r2.top]) == [-1, 1]


@pytest.mark.unit
def test_polynomial_root_raises_rational_case(F3, P):
    with pytest.raises(RationalCase) as info:
        quadratic_series_root(Poly.zero(F3), P(F3, "x^2"))
    assert info.value.root in (P(F3, "x"), P(F3, "2*x"))


@pytest.mark.unit
def test_no_series_root(F3, F2, P):
    assert quadratic_series_root(Poly.zero(F3), P(F3, "x")) is None
    assert quadratic_roots(P(F2, "1"), P(F2, "x")) is None


@pytest.mark.unit
def test_char2_requires_linear_term(F2, P):
    with pytest.raises(InvalidInput):
        quadratic_series_root(Poly.zero(F2), P(F2, "x"))


@pytest.mark.unit
def test_with_precision_doubles_until_success():
    seen = []

    def compute(prec: int) -> int:
        seen.append(prec)
        if prec < 32:
            raise PrecisionExhausted("不够", needed=32)
        return prec

    assert with_precision(compute, 8) == 32
    assert seen == [8, 16, 32]


@pytest.mark.unit
def test_with_precision_stops_at_cap():
    def compute(prec: int) -> int:
        raise PrecisionExhausted("永远不够")

    with pytest.raises(PrecisionExhausted):
        with_precision(compute, 8)


# -------------------------------------------------------------------- F_p 线性代数


@pytest.mark.unit
def test_solve_mod_p():
    A = np.array([[1, 1], [0, 1]])
    assert list(solve_mod_p(A, np.array([1, 0]), 3)) == [1, 0]
    assert solve_mod_p(np.array([[1, 1], [2, 2]]), np.array([1, 0]), 3) is None


@pytest.mark.unit
def test_kernel_basis():
    basis = kernel_basis(np.array([[1, 1]]), 2)
    assert len(basis) == 1
    assert list(basis[0]) == [1, 1]


@pytest.mark.unit
def test_enumerate_affine_ceiling():
    basis = [np.eye(3, dtype=np.int64)[i] for i in range(3)]
    with pytest.raises(BudgetExceeded):
        list(enumerate_affine(np.zeros(3, dtype=np.int64), basis, 2, ceiling=4))
    assert len(list(enumerate_affine(np.zeros(3, dtype=np.int64), basis, 2, ceiling=8))) == 8


@pytest.mark.unit
def test_char2_quadratic(F2, P):
    """u^2 + x*u = x + 1 的解为 1 与 x + 1"""
    solutions = solve_char2_quadratic(P(F2, "x"), P(F2, "x+1"), 1)
    assert solutions == [P(F2, "1"), P(F2, "x+1")]
    assert solve_char2_quadratic(P(F2, "x"), P(F2, "x^3"), 1) == []

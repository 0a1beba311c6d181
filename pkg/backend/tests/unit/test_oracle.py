"""
穷举参照实现测试
"""
import pytest
from pydantic import ValidationError

from backend.fqx_conjugacy.conjugacy.certificate import verify_witness
from backend.fqx_conjugacy.exceptions import BudgetExceeded, InvalidInput
from backend.fqx_conjugacy.oracle.brute_force import (
    SearchBudget,
    brute_decide,
    brute_norm_solutions,
    brute_units,
)


@pytest.mark.unit
def test_brute_decide_worked_pair(F2, M):
    A, B = M(F2, "[[0,1],[x,0]]"), M(F2, "[[x,x+1],[x,x]]")
    U = brute_decide(A, B, SearchBudget(max_deg=1, field=F2))
    assert U is not None
    assert type(U) is type(A)
    assert verify_witness(A, B, U)


@pytest.mark.unit
def test_brute_decide_no_witness(F2, M):
    A, B = M(F2, "[[0,1],[x,0]]"), M(F2, "[[0,1],[x,1]]")
    assert brute_decide(A, B, SearchBudget(max_deg=1, field=F2)) is None


@pytest.mark.unit
def test_brute_decide_field_mismatch(F2, F3, M):
    A = M(F3, "[[0,1],[x,0]]")
    with pytest.raises(InvalidInput):
        brute_decide(A, A, SearchBudget(max_deg=0, field=F2))


@pytest.mark.unit
def test_budget_ceiling(F3):
    budget = SearchBudget(max_deg=4, field=F3)
    assert budget.space(2) == 3 ** 10
    with pytest.raises(BudgetExceeded) as info:
        budget.require(4)
    assert info.value.data["size"] == 3 ** 20
    assert info.value.code == 2


@pytest.mark.unit
def test_budget_validation(F2):
    with pytest.raises(ValidationError):
        SearchBudget(max_deg=-1, field=F2)


@pytest.mark.unit
def test_norm_solutions(F3, P):
    """u^2 + v^2 = 2 在常数中的解"""
    one, zero = P(F3, "1"), P(F3, "0")
    sols = brute_norm_solutions((one, zero, one), P(F3, "2"), SearchBudget(max_deg=0, field=F3))
    assert sorted((u.coeffs, v.coeffs) for u, v in sols) == [
        ((1,), (1,)), ((1,), (2,)), ((2,), (1,)), ((2,), (2,))
    ]


@pytest.mark.unit
def test_brute_units_sorted(F3, P):
    c = P(F3, "x^2+1")
    units = brute_units((P(F3, "0"), -c), SearchBudget(max_deg=1, field=F3))
    assert units == [(P(F3, "1"), P(F3, "0")), (P(F3, "2"), P(F3, "0"))]

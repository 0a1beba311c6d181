"""
单位群与 Pell 方程测试
基本单位与穷举结果对拍, Pell 基本解与输入校验
"""
import pytest

from backend.fqx_conjugacy.algebra.quadring import QuadInt, classify
from backend.fqx_conjugacy.algebra.units import (
    fundamental_unit,
    nontrivial_unit,
    pell_fundamental,
    solve_u_for_v,
)
from backend.fqx_conjugacy.arithmetic.gf import FieldSpec
from backend.fqx_conjugacy.arithmetic.poly import Poly, parse_poly
from backend.fqx_conjugacy.exceptions import InvalidInput, Unsupported
from backend.fqx_conjugacy.oracle.brute_force import SearchBudget, brute_units

F2 = FieldSpec.create(2)
F3 = FieldSpec.create(3)
F5 = FieldSpec.create(5)


def unit_powers(unit, field, max_deg, span=6):
    """±ε0^n (n ∈ [-span, span]) 中次数不超过 max_deg 的元素"""
    out = set()
    for n in range(-span, span + 1):
        w = unit.power(n)
        for lam in field.nonzero():
            s = w.scale(lam)
            if s.degree <= max_deg:
                out.add((s.u, s.v))
    return out


@pytest.mark.unit
def test_pell_x2_plus_1_over_f3():
    u, v = pell_fundamental(parse_poly(F3, "x^2+1"))
    assert u == parse_poly(F3, "x^2+2")
    assert v in (parse_poly(F3, "x"), parse_poly(F3, "2*x"))


@pytest.mark.unit
@pytest.mark.parametrize("D", ["x^2+2", "x^2+x+2", "4*x^2+1"])
def test_pell_solution_over_f5(D):
    Dp = parse_poly(F5, D)
    u, v = pell_fundamental(Dp)
    assert u * u - Dp * v * v == Poly.one(F5)
    assert v.coeffs


@pytest.mark.unit
def test_pell_rejects_bad_inputs():
    with pytest.raises(Unsupported):
        pell_fundamental(parse_poly(F2, "x^2+x"))
    with pytest.raises(InvalidInput):
        pell_fundamental(parse_poly(F3, "x^3+1"))
    with pytest.raises(InvalidInput):
        pell_fundamental(parse_poly(F3, "x^2+2*x+1"))
    with pytest.raises(InvalidInput):
        pell_fundamental(parse_poly(F3, "2"))
    with pytest.raises(InvalidInput):
        pell_fundamental(parse_poly(F3, "2*x^2+1"))


@pytest.mark.unit
def test_char2_fundamental_unit_degree():
    ctx = classify(parse_poly(F2, "x"), Poly.one(F2))
    unit = fundamental_unit(ctx)
    assert unit.degree_k == 1
    assert unit.generator.norm() == Poly.one(F2)
    assert unit.power(3).norm() == Poly.one(F2)
    assert unit.power(-1) * unit.generator == ctx.one()


@pytest.mark.unit
def test_nontrivial_unit_is_power_of_generator():
    ctx = classify(Poly.zero(F3), parse_poly(F3, "x^2+1"))
    eps, exp = nontrivial_unit(ctx)
    unit = fundamental_unit(ctx)
    assert eps.norm() == Poly.one(F3)
    assert exp.T >= 1
    powers = {unit.power(n).scale(lam) for n in range(-4, 5) for lam in F3.nonzero()}
    assert eps in powers


@pytest.mark.unit
@pytest.mark.parametrize(
    "field,b,c,max_deg",
    [
        (F2, "x", "1", 3),
        (F2, "x^2+x", "1", 3),
        (F3, "0", "x^2+1", 2),
    ],
)
def test_units_match_brute_force(field, b, c, max_deg):
    """有界次数内范数为 1 的元素恰好是 ±ε0^n"""
    ctx = classify(parse_poly(field, b), parse_poly(field, c))
    unit = fundamental_unit(ctx)
    found = set(brute_units(ctx.min_poly, SearchBudget(max_deg=max_deg, field=field)))
    assert found == unit_powers(unit, field, max_deg)


@pytest.mark.unit
def test_solve_u_for_v_char2():
    ctx = classify(parse_poly(F2, "x"), Poly.one(F2))
    one = Poly.one(F2)
    for u in solve_u_for_v(ctx, one, one):
        assert QuadInt(ctx, u, one).norm() == one
    assert sorted(solve_u_for_v(ctx, one, one), key=lambda p: p.sort_key()) == [
        Poly.zero(F2),
        parse_poly(F2, "x"),
    ]

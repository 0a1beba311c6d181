"""
连分数测试
渐近分式恒等式、周期检测、约化状态与理论界
"""
import pytest
from hypothesis import assume, given, strategies as st

from backend.fqx_conjugacy.algebra.cfrac import (
    Convergents,
    Surd,
    cf_step,
    expand_periodic,
    period_bound,
)
from backend.fqx_conjugacy.algebra.quadring import QuadCase, classify
from backend.fqx_conjugacy.arithmetic.gf import FieldSpec
from backend.fqx_conjugacy.arithmetic.laurent import LaurentSeries, default_precision
from backend.fqx_conjugacy.arithmetic.poly import Poly, parse_poly
from backend.fqx_conjugacy.exceptions import InvalidInput

F2 = FieldSpec.create(2)
F3 = FieldSpec.create(3)


def sqrt_surd(field: FieldSpec, c_text: str) -> Surd:
    """√c 对应的 surd: t^2 - c = 0 中与 Δ 的嵌入一致的根"""
    c = parse_poly(field, c_text)
    ctx = classify(Poly.zero(field), c)
    prec = default_precision(c)
    one, zero = Poly.one(field), Poly.zero(field)
    return Surd.matching(one, zero, -c, ctx.delta_series(prec), prec)


@pytest.mark.unit
@pytest.mark.property
@given(st.lists(st.lists(st.integers(0, 2), min_size=1, max_size=3), min_size=1, max_size=6))
def test_convergent_determinant_identity(quotients):
    conv = Convergents(F3, [Poly(F3, tuple(q)) for q in quotients])
    assert conv.length == len(quotients)
    assert conv.check_identity()


@pytest.mark.unit
def test_sqrt_expansion_is_periodic():
    s = sqrt_surd(F3, "x^2+1")
    exp = expand_periodic(s)
    assert exp.T >= 1
    assert exp.T <= period_bound(s)
    assert exp.convergents.check_identity()
    # 第一个部分商是 √c 的多项式部分
    assert exp.convergents.partial_quotients[0].deg == 1


@pytest.mark.unit
def test_period_bounds():
    assert period_bound(sqrt_surd(F3, "x^2+1")) == 27
    start = Surd.by_degree(Poly.one(F2), parse_poly(F2, "x"), Poly.one(F2), True, 16)
    assert period_bound(start) == 4


@pytest.mark.unit
def test_char2_reduced_start_is_purely_periodic():
    """b + Δ 是约化元, 展开没有前周期"""
    start = Surd.by_degree(Poly.one(F2), parse_poly(F2, "x"), Poly.one(F2), True, 16)
    assert start.is_reduced()
    exp = expand_periodic(start)
    assert exp.n0 == 0
    assert all(state.in_bounded_set() for state in exp.states[1:])


@pytest.mark.unit
def test_cf_step_equation():
    """下一状态满足 (aA^2 + bA + c) t^2 + (2aA + b) t + a = 0"""
    s = sqrt_surd(F3, "x^2+1")
    A, nxt = cf_step(s)
    a, b, c = s.triple
    expected = (a * A * A + b * A + c, (a * A).scale(2) + b, a)
    assert nxt.triple in (expected, tuple(-p for p in expected))


@pytest.mark.unit
def test_rational_surd_rejected():
    x2 = parse_poly(F3, "x^2")
    target = LaurentSeries.from_poly(parse_poly(F3, "x"))
    with pytest.raises(InvalidInput):
        Surd.matching(Poly.one(F3), Poly.zero(F3), -x2, target, 16)


@pytest.mark.unit
@pytest.mark.property
@given(
    b=st.lists(st.integers(0, 1), min_size=2, max_size=3).filter(lambda cs: cs[-1] == 1),
    c=st.lists(st.integers(0, 1), max_size=3),
)
def test_char2_laws_on_random_real_contexts(b, c):
    """约化起点纯周期, T <= q^(2m), 每个下标上 P_n Q_{n-1} + Q_n P_{n-1} = 1"""
    ctx = classify(Poly(F2, tuple(b)), Poly(F2, tuple(c)))
    assume(ctx.case == QuadCase.REAL)
    start = Surd.by_degree(Poly.one(F2), ctx.b, ctx.c, True, default_precision(ctx.b, ctx.c))
    assert start.is_reduced()
    exp = expand_periodic(start)
    assert exp.n0 == 0
    assert 1 <= exp.T <= period_bound(start)
    assert exp.convergents.check_identity()


@pytest.mark.unit
@pytest.mark.property
@given(tail=st.lists(st.integers(0, 2), min_size=2, max_size=2))
def test_odd_laws_on_random_real_contexts(tail):
    """√c, c = x^2 + c1 x + c0 非平方: T <= q^(3δ), 渐近分式恒等式为 ±1"""
    c = Poly(F3, tuple(tail) + (1,))
    ctx = classify(Poly.zero(F3), c)
    assume(ctx.case == QuadCase.REAL)
    prec = default_precision(c)
    s = Surd.matching(Poly.one(F3), Poly.zero(F3), -c, ctx.delta_series(prec), prec)
    exp = expand_periodic(s)
    assert 1 <= exp.T <= period_bound(s)
    assert exp.convergents.check_identity()

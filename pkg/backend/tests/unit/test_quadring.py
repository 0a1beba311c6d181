"""
二次扩环测试
分类、范数乘性、共轭、逆元、虚情形的 Deg 以及二次型的坐标变换
"""
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from backend.fqx_conjugacy.algebra.quadring import (
    ImaginaryKind,
    QuadCase,
    QuadContext,
    QuadInt,
    classify,
    deg_imaginary,
    has_series_root,
)
from backend.fqx_conjugacy.arithmetic.gf import FieldSpec
from backend.fqx_conjugacy.arithmetic.poly import Poly, parse_poly
from backend.fqx_conjugacy.exceptions import InvalidInput

F2 = FieldSpec.create(2)
F3 = FieldSpec.create(3)


def polys(field: FieldSpec, max_deg: int = 2):
    return st.lists(st.integers(0, field.q - 1), max_size=max_deg + 1).map(
        lambda cs: Poly(field, tuple(cs))
    )


@pytest.mark.unit
@pytest.mark.parametrize(
    "c,case,kind",
    [
        ("x^2+1", QuadCase.REAL, None),
        ("x", QuadCase.IMAGINARY, ImaginaryKind.ODD_DEGREE),
        ("2*x^2+1", QuadCase.IMAGINARY, ImaginaryKind.UNSOLVABLE_LEADING),
        ("x^2+2*x+1", QuadCase.RATIONAL, None),
    ],
)
def test_classify_odd_characteristic(c, case, kind):
    ctx = classify(Poly.zero(F3), parse_poly(F3, c))
    assert ctx.case == case
    assert ctx.imaginary_kind == kind


@pytest.mark.unit
@pytest.mark.parametrize(
    "b,c,case,kind",
    [
        ("x", "1", QuadCase.REAL, None),
        ("1", "x", QuadCase.IMAGINARY, ImaginaryKind.ODD_DEGREE),
        ("x", "x^2", QuadCase.IMAGINARY, ImaginaryKind.UNSOLVABLE_LEADING),
        ("0", "x", QuadCase.IMAGINARY, ImaginaryKind.INSEPARABLE),
        ("0", "x^2", QuadCase.RATIONAL, None),
        ("x+1", "x", QuadCase.RATIONAL, None),
    ],
)
def test_classify_char2(b, c, case, kind):
    ctx = classify(parse_poly(F2, b), parse_poly(F2, c))
    assert ctx.case == case
    assert ctx.imaginary_kind == kind


@pytest.mark.unit
def test_char2_reduction_shift():
    """t^2 + (x+1)t + x = (t+1)(t+x): 替换 u -> u + v 后 c 变为 0"""
    ctx = classify(parse_poly(F2, "x+1"), parse_poly(F2, "x"))
    assert ctx.transform.shift == Poly.one(F2)
    assert not ctx.c.coeffs


@pytest.mark.unit
def test_series_root_agrees_with_classification():
    assert has_series_root(Poly.zero(F3), parse_poly(F3, "x^2+1")) is True
    assert has_series_root(Poly.zero(F3), parse_poly(F3, "x")) is False
    assert has_series_root(Poly.zero(F3), parse_poly(F3, "x^2")) is None


@pytest.mark.unit
@pytest.mark.property
@given(polys(F3), polys(F3), polys(F3), polys(F3))
def test_norm_is_multiplicative(u1, v1, u2, v2):
    ctx = classify(Poly.zero(F3), parse_poly(F3, "x^2+1"))
    w1, w2 = QuadInt(ctx, u1, v1), QuadInt(ctx, u2, v2)
    assert (w1 * w2).norm() == w1.norm() * w2.norm()


@pytest.mark.unit
@pytest.mark.property
@given(polys(F2), polys(F2))
def test_conjugate_product_is_norm(u, v):
    ctx = classify(parse_poly(F2, "x"), parse_poly(F2, "1"))
    w = QuadInt(ctx, u, v)
    product = w * w.conj()
    assert product.u == w.norm()
    assert not product.v.coeffs


@pytest.mark.unit
def test_unit_inverse():
    ctx = classify(parse_poly(F2, "x"), parse_poly(F2, "1"))
    eps = QuadInt(ctx, parse_poly(F2, "x"), Poly.one(F2))
    assert eps.norm() == Poly.one(F2)
    assert eps * eps.inverse() == ctx.one()
    assert eps ** -2 * eps ** 2 == ctx.one()
    with pytest.raises(InvalidInput):
        QuadInt(ctx, parse_poly(F2, "x"), Poly.zero(F2)).inverse()


@pytest.mark.unit
def test_deg_imaginary_half_integral():
    ctx = classify(Poly.zero(F3), parse_poly(F3, "x"))
    x, one = parse_poly(F3, "x"), Poly.one(F3)
    assert deg_imaginary(QuadInt(ctx, x, one)) == Fraction(1)
    assert deg_imaginary(QuadInt(ctx, one, x)) == Fraction(3, 2)


@pytest.mark.unit
@pytest.mark.property
@pytest.mark.parametrize(
    "field,b,c",
    [
        (F3, "0", "x"),
        (F3, "0", "2*x^3+x+1"),
        (F2, "1", "x"),
        (F2, "x", "x^3+1"),
    ],
)
@given(data=st.data())
def test_deg_is_additive(field, b, c, data):
    """deg c 为奇数的虚情形: Deg(αβ) = Deg α + Deg β, N(αβ) = N(α)N(β)"""
    ctx = classify(parse_poly(field, b), parse_poly(field, c))
    assert ctx.imaginary_kind == ImaginaryKind.ODD_DEGREE
    u1, v1, u2, v2 = (data.draw(polys(field)) for _ in range(4))
    assume((u1.coeffs or v1.coeffs) and (u2.coeffs or v2.coeffs))
    w1, w2 = QuadInt(ctx, u1, v1), QuadInt(ctx, u2, v2)
    assert deg_imaginary(w1 * w2) == deg_imaginary(w1) + deg_imaginary(w2)
    assert (w1 * w2).norm() == w1.norm() * w2.norm()


@pytest.mark.unit
def test_deg_imaginary_requires_odd_degree_case():
    ctx = classify(Poly.zero(F3), parse_poly(F3, "2*x^2+1"))
    with pytest.raises(InvalidInput):
        deg_imaginary(ctx.one())


@pytest.mark.unit
@pytest.mark.property
@pytest.mark.parametrize(
    "field,form",
    [
        (F2, ("x", "1", "x+1")),
        (F2, ("1", "x", "1")),
        (F3, ("x", "x+1", "2")),
        (F3, ("1", "x", "2*x^2")),
    ],
)
@given(data=st.data())
def test_form_transform_scales_norm(field, form, data):
    """N(规范化坐标) = a * 原二次型"""
    a, b, c = (parse_poly(field, t) for t in form)
    ctx = QuadContext.from_form(a, b, c)
    u, v = data.draw(polys(field)), data.draw(polys(field))
    u_n, v_n = ctx.transform.to_normalized(u, v)
    assert ctx.norm_form(u_n, v_n) == ctx.transform.normalize_rhs(ctx.original_form(u, v))
    assert ctx.transform.to_original(u_n, v_n) == (u, v)


@pytest.mark.unit
def test_zero_leading_form_rejected():
    with pytest.raises(InvalidInput):
        QuadContext.from_form(Poly.zero(F3), Poly.one(F3), Poly.one(F3))

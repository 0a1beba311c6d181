"""
有限域测试
素域与扩域上的运算、平方根、文本格式与域描述校验
"""
import pytest
from hypothesis import given, strategies as st

from backend.fqx_conjugacy.arithmetic.gf import FieldElement, FieldSpec, field_enumerate, is_square
from backend.fqx_conjugacy.exceptions import DivisionByZero, InvalidInput, ParseError

FIELDS = [FieldSpec.create(2), FieldSpec.create(3), FieldSpec.create(2, 2), FieldSpec.create(3, 2)]


def elements(field: FieldSpec):
    return st.integers(min_value=0, max_value=field.q - 1)


@pytest.mark.unit
@pytest.mark.parametrize("field", FIELDS, ids=lambda F: f"F{F.q}")
def test_every_nonzero_element_has_inverse(field):
    """测试每个非零元素都可逆"""
    for a in field.nonzero():
        assert field.mul(a, field.inv(a)) == 1


@pytest.mark.unit
@pytest.mark.property
@pytest.mark.parametrize("field", FIELDS, ids=lambda F: f"F{F.q}")
@given(data=st.data())
def test_distributive_law(field, data):
    a, b, c = (data.draw(elements(field)) for _ in range(3))
    left = field.mul(a, field.add(b, c))
    right = field.add(field.mul(a, b), field.mul(a, c))
    assert left == right


@pytest.mark.unit
def test_f4_multiplication_follows_modulus(F4):
    """a^2 = a + 1 in F_4"""
    a = F4.parse("a")
    assert F4.mul(a, a) == F4.parse("a+1")
    assert F4.inv(a) == F4.parse("a+1")
    assert F4.format(F4.parse("a+1")) == "a+1"


@pytest.mark.unit
def test_f9_default_modulus():
    F9 = FieldSpec.create(3, 2)
    a = F9.parse("a")
    assert F9.mul(a, a) == F9.parse("2")
    assert F9.describe() == "field p=3 k=2 modulus=a^2+1"


@pytest.mark.unit
@pytest.mark.parametrize("field", FIELDS, ids=lambda F: f"F{F.q}")
def test_sqrt_squares_back(field):
    for a in field.elements():
        root = field.sqrt(a)
        if root is not None:
            assert field.mul(root, root) == a


@pytest.mark.unit
def test_char2_every_element_is_square(F4):
    assert all(F4.is_square(a) for a in F4.elements())
    with pytest.raises(InvalidInput):
        F4.non_square()


@pytest.mark.unit
def test_odd_field_squares(F5):
    squares = sorted(a for a in F5.nonzero() if F5.is_square(a))
    assert squares == [1, 4]
    assert F5.non_square() == 2


@pytest.mark.unit
def test_inverse_of_zero(F3):
    with pytest.raises(DivisionByZero):
        F3.inv(0)


@pytest.mark.unit
@pytest.mark.parametrize("p,k,modulus", [(4, 1, None), (2, 0, None), (2, 2, [1, 0, 1]), (3, 2, [1, 0, 0])])
def test_invalid_field_descriptions(p, k, modulus):
    """非素数特征、非正次数、可约或次数不符的模多项式"""
    with pytest.raises(InvalidInput):
        FieldSpec.create(p, k, modulus)


@pytest.mark.unit
def test_parse_rejects_extension_symbol_in_prime_field(F3):
    with pytest.raises(ParseError):
        F3.parse("a")


@pytest.mark.unit
def test_field_element_wrapper(F4):
    elems = list(field_enumerate(F4))
    assert len(elems) == 4
    a = elems[2]
    assert a * a.inverse() == FieldElement(F4, 1)
    assert (a + a).value == 0
    assert is_square(a)
    assert str(a) == "a"

"""
中心化子生成元测试
"""
import pytest

from backend.fqx_conjugacy.algebra.quadring import QuadCase
from backend.fqx_conjugacy.conjugacy.centralizer import (
    centralizer_bound,
    centralizer_generator,
    is_semisimple,
    primitive_part,
)
from backend.fqx_conjugacy.exceptions import Unsupported


@pytest.mark.integration
def test_char2_real_generator(F2, M):
    A = M(F2, "[[0,1],[1,x]]")
    report = centralizer_generator(A)
    U = report.generator
    assert report.infinite
    assert report.case == QuadCase.REAL
    assert U * A == A * U
    assert U.is_invertible()
    assert U.degree == 1
    assert U.degree <= centralizer_bound(A)


@pytest.mark.integration
def test_odd_char_generator_from_pell(F3, M, P):
    """A^2 = x^2 + 1, 生成元来自 Pell 基本解"""
    A = M(F3, "[[0,1],[x^2+1,0]]")
    report = centralizer_generator(A)
    U = report.generator
    assert U is not None
    assert U * A == A * U
    assert U.det() == P(F3, "1")
    assert U.a11 == U.a22
    assert U.a11 in (P(F3, "x^2+2"), -P(F3, "x^2+2"))


@pytest.mark.integration
def test_imaginary_centralizer_is_finite(F2, M):
    report = centralizer_generator(M(F2, "[[0,1],[x,0]]"))
    assert report.generator is None
    assert report.case == QuadCase.IMAGINARY
    assert not report.infinite


@pytest.mark.integration
def test_primitive_part_divides_out_content(F3, M):
    A = M(F3, "[[1,x],[x^2,x+1]]")
    assert primitive_part(A) == M(F3, "[[0,1],[x,1]]")


@pytest.mark.integration
def test_unsupported_inputs(F2, F3, M):
    with pytest.raises(Unsupported):
        centralizer_generator(M(F3, "[[x,0],[0,x]]"))
    assert not is_semisimple(M(F3, "[[1,1],[0,1]]"))
    with pytest.raises(Unsupported):
        centralizer_generator(M(F3, "[[1,1],[0,1]]"))
    with pytest.raises(Unsupported):
        centralizer_generator(M(F2, "[[1,1],[0,1]]"))

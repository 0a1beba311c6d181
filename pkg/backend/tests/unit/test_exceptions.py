"""
异常与错误处理测试
"""
import logging

import pytest

from backend.fqx_conjugacy.exceptions import (
    BudgetExceeded,
    DivisionByZero,
    InternalInvariantViolation,
    InvalidInput,
    ParseError,
    PrecisionExhausted,
    RationalCase,
    SolverBaseException,
    Unsupported,
)
from backend.fqx_conjugacy.utils.error_handler import EXIT_INTERNAL, error_details, handle_error


@pytest.mark.unit
@pytest.mark.parametrize(
    "error,code",
    [
        (InvalidInput("坏输入"), 2),
        (ParseError("坏文本", line=2, column=5), 2),
        (Unsupported(), 2),
        (BudgetExceeded(size=10, ceiling=5), 2),
        (DivisionByZero(), 3),
        (PrecisionExhausted(needed=64), 3),
        (RationalCase(root="x"), 3),
        (InternalInvariantViolation("界被突破", {"delta": 1}), 3),
    ],
)
def test_exit_codes(error, code):
    assert isinstance(error, SolverBaseException)
    assert error.code == code
    assert handle_error(error, logging.getLogger("tests")) == code
    assert error_details(error)["code"] == code


@pytest.mark.unit
def test_to_dict():
    error = BudgetExceeded("太大", size=10, ceiling=5)
    assert error.to_dict() == {
        "type": "BudgetExceeded",
        "code": 2,
        "message": "太大",
        "data": {"size": 10, "ceiling": 5},
    }


@pytest.mark.unit
def test_parse_error_location():
    error = ParseError("缺少 ]", line=3, column=7)
    assert error.detail == "缺少 ]"
    assert error.message == "第3行第7列: 缺少 ]"
    assert error.data["errors"] == {"line": 3, "column": 7}
    assert isinstance(error, InvalidInput)


@pytest.mark.unit
def test_transcript_preserved():
    error = InternalInvariantViolation("见证失败", {"A": "[[0,1],[x,0]]"})
    assert error.transcript == {"A": "[[0,1],[x,0]]"}
    assert InternalInvariantViolation().transcript == {}


@pytest.mark.unit
def test_unexpected_errors_are_internal(caplog):
    with caplog.at_level(logging.ERROR, logger="tests"):
        assert handle_error(ValueError("boom"), logging.getLogger("tests")) == EXIT_INTERNAL
    assert "boom" in caplog.text
    details = error_details(KeyError())
    assert details["type"] == "KeyError"
    assert details["code"] == EXIT_INTERNAL

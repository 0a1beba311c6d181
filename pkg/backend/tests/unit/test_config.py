"""
配置测试
"""
import pytest
from pydantic import ValidationError

from backend.fqx_conjugacy.core.config import (
    Settings,
    get_settings,
    load_environment_config,
    settings,
)


@pytest.mark.unit
def test_test_environment_loaded():
    assert settings.ENVIRONMENT == "test"
    assert settings.LOG_LEVEL == "WARNING"
    assert settings.ENUMERATION_CEILING == 262144
    assert settings.SELFTEST_BUDGET == 0
    assert get_settings() is settings


@pytest.mark.unit
def test_missing_environment_file():
    assert load_environment_config("no-such-environment") == {}


@pytest.mark.unit
def test_placeholder_replaced_from_environment(monkeypatch):
    monkeypatch.setenv("FQX_LOG_LEVEL", "DEBUG")
    assert load_environment_config("dev")["LOG_LEVEL"] == "DEBUG"
    monkeypatch.delenv("FQX_LOG_LEVEL")
    assert "LOG_LEVEL" not in load_environment_config("dev")


@pytest.mark.unit
def test_explicit_values_and_validation():
    assert Settings(ENUMERATION_CEILING=7).ENUMERATION_CEILING == 7
    with pytest.raises(ValidationError):
        Settings(ENUMERATION_CEILING="many")


@pytest.mark.unit
def test_paths():
    assert settings.LOGGING_CONFIG_FILE.name == "logging_config.yaml"
    assert settings.LOGGING_CONFIG_FILE.exists()
    assert settings.LOG_DIR.name == "logs"

"""
日志管理器测试
"""
import logging

import pytest

from backend.fqx_conjugacy.core.logger import (
    PACKAGE_LOGGER,
    LoggerManager,
    get_logger_manager,
    setup_logger,
)


@pytest.mark.unit
def test_singleton():
    assert LoggerManager() is LoggerManager()
    assert get_logger_manager() is get_logger_manager()


@pytest.mark.unit
def test_configure_applies_level():
    manager = get_logger_manager()
    manager.configure("debug")
    assert logging.getLogger(PACKAGE_LOGGER).level == logging.DEBUG
    manager.configure()
    assert logging.getLogger(PACKAGE_LOGGER).level == logging.WARNING


@pytest.mark.unit
def test_error_counting():
    name = f"{PACKAGE_LOGGER}.tests.counting"
    logger = setup_logger(name)
    assert setup_logger(name) is logger
    logger.error("测试错误")
    stats = get_logger_manager().get_stats()
    assert stats["统计信息"][name]["error_count"] >= 1
    assert stats["统计信息"][name]["last_error"] == "测试错误"


@pytest.mark.unit
def test_stats_shape():
    stats = get_logger_manager().get_stats()
    assert {"运行时间", "日志器数量", "统计信息", "系统信息"} <= set(stats)
    assert stats["系统信息"]["线程数"] >= 1
    assert stats["系统信息"]["内存使用(MB)"] > 0

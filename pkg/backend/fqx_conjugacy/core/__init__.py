"""
核心模块: 配置与日志
"""
from .config import Settings, settings, get_settings
from .logger import setup_logger, get_logger_manager

__all__ = ["Settings", "settings", "get_settings", "setup_logger", "get_logger_manager"]

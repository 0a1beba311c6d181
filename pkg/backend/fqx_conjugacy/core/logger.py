"""
日志管理模块
按 config/logging_config.yaml 配置日志, 并统计各日志器的记录数与进程资源
"""
import copy
import logging
import logging.config
import os
import threading
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

import psutil
import yaml

from .config import settings

PACKAGE_LOGGER = "backend.fqx_conjugacy"


class LoggerManager:
    """日志管理器（单例模式）"""
    _instance: Optional["LoggerManager"] = None
    _lock = threading.Lock()

    def __new__(cls) -> "LoggerManager":
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = super().__new__(cls)
                    cls._instance._initialize()
        return cls._instance

    def _initialize(self) -> None:
        """初始化日志管理器"""
        self._loggers: Dict[str, logging.Logger] = {}
        self._stats: Dict[str, Dict[str, Any]] = {}
        self._start_time = datetime.now()
        self._configured = False

    def _load_dict_config(self) -> Dict[str, Any]:
        """读取 YAML 日志配置, 失败时退回到仅控制台输出"""
        path = settings.LOGGING_CONFIG_FILE
        if path.exists():
            with open(path, "r", encoding="utf-8") as f:
                return yaml.safe_load(f)
        return {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "standard": {"format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s"}
            },
            "handlers": {
                "console": {
                    "class": "logging.StreamHandler",
                    "formatter": "standard",
                    "stream": "ext://sys.stderr",
                }
            },
            "loggers": {PACKAGE_LOGGER: {"handlers": ["console"], "propagate": False}},
        }

    def configure(self, level: Optional[str] = None) -> None:
        """应用日志配置(可重复调用)"""
        with self._lock:
            config = copy.deepcopy(self._load_dict_config())
            handlers = config.get("handlers", {})
            package = config.setdefault("loggers", {}).setdefault(PACKAGE_LOGGER, {})
            package["level"] = (level or settings.LOG_LEVEL).upper()

            if settings.LOG_TO_FILE:
                log_dir = settings.LOG_DIR
                log_dir.mkdir(exist_ok=True, parents=True)
                for name in ("file", "error_file"):
                    if name in handlers:
                        handlers[name]["filename"] = str(log_dir / Path(handlers[name]["filename"]).name)
                package["handlers"] = ["console"] + [n for n in ("file", "error_file") if n in handlers]
            else:
                for name in ("file", "error_file"):
                    handlers.pop(name, None)
                package["handlers"] = ["console"]

            logging.config.dictConfig(config)
            self._configured = True

    def _attach_counter(self, logger: logging.Logger, name: str) -> None:
        self._stats[name] = {
            "created_at": datetime.now(),
            "log_count": 0,
            "error_count": 0,
            "last_error": None,
        }

        def count_logs(record: logging.LogRecord) -> bool:
            stats = self._stats[name]
            stats["log_count"] += 1
            if record.levelno >= logging.ERROR:
                stats["error_count"] += 1
                stats["last_error"] = record.getMessage()
            return True

        logger.addFilter(count_logs)

    def get_logger(self, name: str) -> logging.Logger:
        """获取或创建日志器"""
        if name in self._loggers:
            return self._loggers[name]

        if not self._configured:
            self.configure()

        with self._lock:
            if name in self._loggers:
                return self._loggers[name]
            logger = logging.getLogger(name)
            self._attach_counter(logger, name)
            self._loggers[name] = logger
            return logger

    def get_stats(self) -> Dict[str, Any]:
        """获取统计信息"""
        process = psutil.Process(os.getpid())
        return {
            "运行时间": (datetime.now() - self._start_time).total_seconds(),
            "日志器数量": len(self._loggers),
            "统计信息": {k: dict(v) for k, v in self._stats.items()},
            "系统信息": {
                "内存使用(MB)": process.memory_info().rss / 1024 / 1024,
                "CPU使用率": process.cpu_percent(),
                "线程数": len(threading.enumerate()),
            },
        }


# 全局实例和接口
_logger_manager: Optional[LoggerManager] = None


def get_logger_manager() -> LoggerManager:
    """获取日志管理器实例"""
    global _logger_manager
    if _logger_manager is None:
        _logger_manager = LoggerManager()
    return _logger_manager


def setup_logger(name: str) -> logging.Logger:
    """统一的日志配置入口"""
    return get_logger_manager().get_logger(name)


__all__ = ["LoggerManager", "get_logger_manager", "setup_logger", "PACKAGE_LOGGER"]

"""
配置管理模块
包含求解器与命令行的全部配置项

加载顺序: .env 文件与环境变量优先, 其次是 config/environments/<ENVIRONMENT>.yaml,
最后是这里的默认值。YAML 中的 ${VAR} 占位符会被环境变量替换。
"""
import logging
import os
from pathlib import Path
from typing import Any, Dict

import yaml
from dotenv import load_dotenv
from pydantic_settings import BaseSettings

# 加载.env文件
load_dotenv()

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parents[3]
CONFIG_DIR = PROJECT_ROOT / "config"


class Settings(BaseSettings):
    PROJECT_NAME: str = "fqx-conjugacy"
    ENVIRONMENT: str = "dev"

    # 日志配置
    LOG_LEVEL: str = "INFO"
    LOG_TO_FILE: bool = False

    # Laurent 级数精度
    LAURENT_MIN_PRECISION: int = 0      # 0 表示使用默认公式 4*max(deg b, deg c)+8
    LAURENT_PRECISION_CAP: int = 512

    # 连分数与枚举
    CF_BOUND_MULTIPLIER: int = 4
    IMAGINARY_DEGREE_GUARD: int = 1
    ENUMERATION_CEILING: int = 1 << 20
    LINEAR_SEARCH_CEILING: int = 1 << 12

    # 命令行
    SELFTEST_BUDGET: int = 1
    DEFAULT_JOBS: int = 1

    # 有限域规模上限
    MAX_FIELD_ORDER: int = 1 << 16

    @property
    def LOG_DIR(self) -> Path:
        return PROJECT_ROOT / "logs"

    @property
    def LOGGING_CONFIG_FILE(self) -> Path:
        return CONFIG_DIR / "logging_config.yaml"

    class Config:
        case_sensitive = True
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"


def _replace_env_vars(config: Any) -> Any:
    """递归替换配置中的环境变量"""
    if isinstance(config, dict):
        return {k: _replace_env_vars(v) for k, v in config.items()}
    elif isinstance(config, list):
        return [_replace_env_vars(v) for v in config]
    elif isinstance(config, str) and config.startswith("${") and config.endswith("}"):
        env_value = os.getenv(config[2:-1])
        if env_value is None:
            return None
        return env_value
    return config


def load_environment_config(environment: str) -> Dict[str, Any]:
    """读取 config/environments/<environment>.yaml"""
    config_path = CONFIG_DIR / "environments" / f"{environment}.yaml"
    if not config_path.exists():
        logger.warning(f"环境配置文件不存在: {config_path}")
        return {}

    with open(config_path, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}
    solver = _replace_env_vars(raw.get("solver", {})) or {}
    return {k: v for k, v in solver.items() if v is not None}


def _build_settings() -> Settings:
    base = Settings()
    overrides = load_environment_config(base.ENVIRONMENT)
    updates = {
        key: value for key, value in overrides.items()
        if key in Settings.model_fields and key not in base.model_fields_set
    }
    if not updates:
        return base
    logger.debug(f"应用环境配置 {base.ENVIRONMENT}: {sorted(updates)}")
    return Settings(**{**base.model_dump(), **updates})


# 创建全局设置实例
settings = _build_settings()


def get_settings() -> Settings:
    """获取全局设置实例"""
    return settings


__all__ = ["Settings", "settings", "get_settings", "load_environment_config", "PROJECT_ROOT"]

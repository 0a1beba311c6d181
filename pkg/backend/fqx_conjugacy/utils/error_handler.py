"""
统一错误处理
把任意异常转换为命令行退出码并记录日志
"""
import logging
import traceback
from typing import Any, Dict, Optional

from ..exceptions import InternalInvariantViolation, SolverBaseException

EXIT_INTERNAL = 3


def error_details(error: Exception) -> Dict[str, Any]:
    """异常的结构化描述, 供日志与 stderr 输出"""
    if isinstance(error, SolverBaseException):
        return error.to_dict()
    return {
        "type": type(error).__name__,
        "code": EXIT_INTERNAL,
        "message": str(error) or type(error).__name__,
        "data": {},
    }


def handle_error(error: Exception, logger: Optional[logging.Logger] = None) -> int:
    """返回退出码: 输入类错误为 2, 不变量与内部错误为 3"""
    logger = logger or logging.getLogger(__name__)
    if isinstance(error, InternalInvariantViolation):
        logger.error(f"内部不变量被违反: {error.message}, 记录: {error.transcript}")
        return error.code
    if isinstance(error, SolverBaseException):
        log = logger.error if error.code >= EXIT_INTERNAL else logger.warning
        log(f"{type(error).__name__}: {error.message}")
        return error.code
    logger.error(f"未预期的错误: {error!r}")
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(traceback.format_exc())
    return EXIT_INTERNAL


__all__ = ["handle_error", "error_details", "EXIT_INTERNAL"]

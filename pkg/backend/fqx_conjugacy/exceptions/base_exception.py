"""
基础异常类模块
定义求解器中所有异常的基类
"""
from typing import Any, Dict, Optional


class SolverBaseException(Exception):
    """
    基础异常类
    所有自定义异常都应继承此类, code 即命令行退出码
    """
    def __init__(
        self,
        message: str = "求解器错误",
        code: int = 3,
        data: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.code = code
        self.data = data or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """
        将异常转换为字典格式
        """
        return {
            "type": type(self).__name__,
            "code": self.code,
            "message": self.message,
            "data": self.data
        }


class InternalInvariantViolation(SolverBaseException):
    """内部不变量被破坏(理论界或精度问题)"""
    def __init__(
        self,
        message: str = "内部不变量被破坏",
        transcript: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message=message, code=3, data={"transcript": transcript or {}})

    @property
    def transcript(self) -> Dict[str, Any]:
        return self.data["transcript"]


__all__ = [
    "SolverBaseException",
    "InternalInvariantViolation",
]

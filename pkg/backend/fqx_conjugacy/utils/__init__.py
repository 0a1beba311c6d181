"""
工具模块
"""
from .error_handler import handle_error, error_details

__all__ = ["handle_error", "error_details"]

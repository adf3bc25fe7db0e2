"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Error hierarchy shared by the library and the CLI. Each class carries the
    exit code the CLI uses when the error escapes a command.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# errors.py - exceptions + exit codes
from typing import Optional


class LaiLossError(Exception):
    exit_code = 1


class ConfigError(LaiLossError, ValueError):
    exit_code = 2


class ParseError(LaiLossError, ValueError):
    exit_code = 2

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        super().__init__(message)
        self.row = row
        self.column = column


class DimensionError(LaiLossError, ValueError):
    pass


class NonFiniteValue(LaiLossError, ArithmeticError):
    pass


class UnsupportedDepth(LaiLossError):
    pass


class EmptyBatch(LaiLossError, ValueError):
    pass


class DivergenceError(LaiLossError):
    def __init__(self, message: str, epoch: int):
        super().__init__(message)
        self.epoch = epoch


class IoError(LaiLossError):
    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(message)
        self.path = path

"""
Error hierarchy shared by every module.

InputDataError subclasses are problems with what the caller supplied (files,
schema, configuration); ComputationError subclasses are problems found while
computing on otherwise valid input. The CLI maps them to exit codes 2 and 3.
"""

from __future__ import annotations

from typing import Optional


class LeadLagError(Exception):
    exit_code: int = 1


class InputDataError(LeadLagError, ValueError):
    exit_code = 2


class ComputationError(LeadLagError, ValueError):
    exit_code = 3


class ParseError(InputDataError):
    def __init__(self, message: str, *, row: Optional[int] = None, path: Optional[str] = None):
        self.row = row
        self.path = path
        where = []
        if path:
            where.append(str(path))
        if row is not None:
            where.append(f"row {row}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


class SpliceGapError(InputDataError):
    pass


class ConfigurationError(InputDataError):
    pass


class InsufficientDataError(InputDataError):
    pass


class DegenerateSeriesError(ComputationError):
    pass


class LengthMismatchError(ComputationError):
    pass


class UnreachableNodeError(ComputationError):
    pass


class FieldMismatchError(ComputationError):
    pass


class OracleRefusedError(ComputationError):
    pass

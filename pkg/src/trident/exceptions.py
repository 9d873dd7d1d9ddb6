# Copyright (c) 2026 Trident contributors
# SPDX-License-Identifier: MIT

"""Error taxonomy shared by the library and the CLI."""

from __future__ import annotations

from collections.abc import Iterable
from enum import Enum


class TridentErrorCode(str, Enum):
    """Machine-readable error codes.

    Input codes (bad files or arguments; CLI exit 2):
        PARSE_ERROR, DOMAIN_ERROR, PARAMETER_ERROR, ORACLE_LIMIT, IO_ERROR

    Arithmetic codes (CLI exit 3):
        CAPACITY_OVERFLOW, INTERNAL

    Surface codes:
        USAGE_ERROR (CLI exit 1)
    """

    PARSE_ERROR = "PARSE_ERROR"
    DOMAIN_ERROR = "DOMAIN_ERROR"
    PARAMETER_ERROR = "PARAMETER_ERROR"
    ORACLE_LIMIT = "ORACLE_LIMIT"
    IO_ERROR = "IO_ERROR"
    CAPACITY_OVERFLOW = "CAPACITY_OVERFLOW"
    USAGE_ERROR = "USAGE_ERROR"
    INTERNAL = "INTERNAL"


class TridentError(Exception):
    """Base class for every error trident raises on purpose.

    Attributes:
        code: Structured error code for programmatic handling.
    """

    def __init__(self, message: str, *, code: TridentErrorCode = TridentErrorCode.INTERNAL) -> None:
        super().__init__(message)
        self.code = code


class EdgeListParseError(TridentError, ValueError):
    """A non-comment edge-list line was not valid UTF-8 or did not hold exactly two labels.

    Attributes:
        line_number: 1-based line number in the input.
        line: The offending line, stripped.
    """

    def __init__(self, line_number: int, line: str, reason: str = "expected two whitespace-separated labels") -> None:
        super().__init__(
            f"line {line_number}: {reason}, got {line!r}",
            code=TridentErrorCode.PARSE_ERROR,
        )
        self.line_number = line_number
        self.line = line


class SolutionParseError(TridentError, ValueError):
    """An LP solution file held a malformed or unknown variable line."""

    def __init__(self, line_number: int, line: str, reason: str) -> None:
        super().__init__(f"solution line {line_number}: {reason}: {line!r}", code=TridentErrorCode.PARSE_ERROR)
        self.line_number = line_number
        self.line = line


class VertexDomainError(TridentError, IndexError):
    """A vertex set references ids outside ``0..n-1``."""

    def __init__(self, bad_ids: Iterable[int], n: int) -> None:
        self.bad_ids = tuple(sorted(bad_ids))
        self.n = n
        super().__init__(
            f"vertex ids {list(self.bad_ids)} are outside the graph (n={n})", code=TridentErrorCode.DOMAIN_ERROR
        )


class ParameterError(TridentError, ValueError):
    """A solver or generator parameter is out of range."""

    def __init__(self, parameter: str, value: object, requirement: str) -> None:
        super().__init__(f"{parameter}={value!r}: {requirement}", code=TridentErrorCode.PARAMETER_ERROR)
        self.parameter = parameter
        self.value = value


class UsageError(TridentError):
    """Bad command-line usage: unknown command, malformed flag, missing option."""

    def __init__(self, message: str) -> None:
        super().__init__(message, code=TridentErrorCode.USAGE_ERROR)


class CapacityOverflowError(TridentError, ArithmeticError):
    """A flow capacity or flow value exceeded the configured integer width."""

    def __init__(self, value: int, limit_bits: int) -> None:
        super().__init__(
            f"capacity {value} does not fit in {limit_bits} bits", code=TridentErrorCode.CAPACITY_OVERFLOW
        )
        self.value = value
        self.limit_bits = limit_bits


class FlowInvariantError(TridentError, ArithmeticError):
    """The residual cut disagreed with the flow value; a bug in the flow engine."""

    def __init__(self, cut: int, flow: int) -> None:
        super().__init__(f"cut capacity {cut} differs from flow value {flow}", code=TridentErrorCode.INTERNAL)
        self.cut = cut
        self.flow = flow


class OracleLimitError(TridentError, ValueError):
    """The brute-force oracle refused an instance above its hard cap."""

    def __init__(self, size: int, limit: int, what: str = "vertices") -> None:
        super().__init__(
            f"brute force is capped at {limit} {what}, instance has {size}", code=TridentErrorCode.ORACLE_LIMIT
        )
        self.size = size
        self.limit = limit


__all__ = [
    "CapacityOverflowError",
    "EdgeListParseError",
    "FlowInvariantError",
    "OracleLimitError",
    "ParameterError",
    "SolutionParseError",
    "TridentError",
    "TridentErrorCode",
    "UsageError",
    "VertexDomainError",
]

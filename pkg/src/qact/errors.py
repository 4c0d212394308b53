"""Exception hierarchy shared by every qact module."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from qact.card import ValidationReport


class QactError(Exception):
    """Base class for all errors raised by qact."""


class CardFormatError(QactError):
    """A card document is malformed or does not match the card schema."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)


class QasmError(QactError):
    """Lexical, syntactic or semantic error in OpenQASM source."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"{line}:{column}: {message}")


class ExpressionError(QactError, ValueError):
    """A gate parameter expression cannot be evaluated."""


class UnboundNameError(ExpressionError):
    pass


class DivisionByZeroError(ExpressionError, ZeroDivisionError):
    pass


class DomainError(ExpressionError):
    pass


class FlattenError(QactError):
    """A parsed program cannot be expanded into built-in gate applications."""


class GeneratorError(QactError):
    pass


class MatchError(QactError):
    pass


class RenderError(QactError):
    """Raised when a card is not complete enough for the requested audience."""

    def __init__(self, message: str, report: ValidationReport):
        self.report = report
        super().__init__(message)

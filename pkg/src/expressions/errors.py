"""
Expression Errors

Exceptions raised while parsing or evaluating family-definition expressions.
"""

from typing import Optional


class ExpressionError(Exception):
    """Base exception for the expression language"""
    pass


class ParseError(ExpressionError):
    """Positioned syntax error; position is a 0-based character offset."""

    def __init__(self, message: str, source: str = "", position: Optional[int] = None):
        self.reason = message
        self.source = source
        self.position = position
        super().__init__(self._render())

    def _render(self) -> str:
        if self.position is None:
            return self.reason
        caret = " " * self.position + "^"
        return f"{self.reason} at position {self.position}\n  {self.source}\n  {caret}"


class EvaluationError(ExpressionError):
    """Raised when a well-formed expression has no value in the target type"""
    pass

"""
Expression Language Package

Parses the textual expressions used in family-definition files and evaluates
them exactly over a declared indeterminate ring.
"""

from .errors import ExpressionError, ParseError, EvaluationError
from .ast_nodes import ExprAst, NodeKind
from .parser import ExpressionParser, Token, parse, tokenize
from .printer import format_expr
from .evaluator import eval_to_ratfun, eval_to_xpoly, evaluate_source

__all__ = [
    'ExpressionError',
    'ParseError',
    'EvaluationError',
    'ExprAst',
    'NodeKind',
    'ExpressionParser',
    'Token',
    'parse',
    'tokenize',
    'format_expr',
    'eval_to_ratfun',
    'eval_to_xpoly',
    'evaluate_source',
]

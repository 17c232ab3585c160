"""
Expression Evaluator

Evaluates parsed expressions exactly into RatFun or XPoly values over a
declared indeterminate ring.
"""

from typing import Union

from algebra import AlgebraError, IndeterminateRing, NotPolynomialInXError, RatFun, XPoly

from .ast_nodes import ExprAst, NodeKind
from .errors import EvaluationError
from .parser import parse


def eval_to_ratfun(ast: ExprAst, ring: IndeterminateRing) -> RatFun:
    """
    Evaluate to a normalized rational function.

    Raises:
        EvaluationError: On an identifier outside the ring or division by zero
    """
    kind = ast.kind
    if kind == NodeKind.RATIONAL:
        return RatFun.constant(ring, ast.value)
    if kind == NodeKind.IDENTIFIER:
        if not ring.has(ast.name):
            raise EvaluationError(f"Identifier {ast.name!r} not in ring {list(ring.names)}")
        return RatFun.of(ring.gen(ast.name))
    if kind == NodeKind.NEGATE:
        return -eval_to_ratfun(ast.children[0], ring)
    if kind == NodeKind.POWER:
        return eval_to_ratfun(ast.children[0], ring) ** ast.exponent

    left = eval_to_ratfun(ast.children[0], ring)
    right = eval_to_ratfun(ast.children[1], ring)
    if kind == NodeKind.ADD:
        return left + right
    if kind == NodeKind.SUBTRACT:
        return left - right
    if kind == NodeKind.MULTIPLY:
        return left * right
    if right.is_zero:
        raise EvaluationError("Division by an expression that evaluates to zero")
    return left / right


def eval_to_xpoly(ast: ExprAst, ring: IndeterminateRing) -> XPoly:
    """
    Evaluate to a polynomial in x.

    Raises:
        EvaluationError: Additionally when x survives in the denominator
    """
    value = eval_to_ratfun(ast, ring)
    try:
        return XPoly(value)
    except NotPolynomialInXError as e:
        raise EvaluationError(f"Expression is not polynomial in x: {e}") from e


def evaluate_source(source: str, ring: IndeterminateRing, as_xpoly: bool = True) -> Union[XPoly, RatFun]:
    """Parse and evaluate in one step."""
    ast = parse(source, ring.params)
    try:
        return eval_to_xpoly(ast, ring) if as_xpoly else eval_to_ratfun(ast, ring)
    except AlgebraError as e:
        raise EvaluationError(str(e)) from e

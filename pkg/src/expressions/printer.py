"""
Expression Pretty-Printer

Renders an ExprAst back to source text that reparses to an equal AST.
"""

from .ast_nodes import ExprAst, NodeKind


_SUMS = (NodeKind.ADD, NodeKind.SUBTRACT)
_PRODUCTS = (NodeKind.MULTIPLY, NodeKind.DIVIDE)


def format_expr(ast: ExprAst) -> str:
    """Render `ast` in the expression language."""
    kind = ast.kind
    if kind == NodeKind.RATIONAL:
        return _format_rational(ast)
    if kind == NodeKind.IDENTIFIER:
        return ast.name

    if kind == NodeKind.NEGATE:
        operand = ast.children[0]
        text = format_expr(operand)
        if _is_plain_rational(operand) or operand.kind in (NodeKind.IDENTIFIER, NodeKind.NEGATE):
            return f"-{text}"
        return f"-({text})"

    if kind == NodeKind.POWER:
        base = ast.children[0]
        text = format_expr(base)
        bare = base.kind == NodeKind.IDENTIFIER or \
            (_is_plain_rational(base) and base.value.denominator == 1)
        return f"{text}^{ast.exponent}" if bare else f"({text})^{ast.exponent}"

    left, right = ast.children
    left_text, right_text = format_expr(left), format_expr(right)
    if kind in _SUMS:
        if right.kind in _SUMS:
            right_text = f"({right_text})"
        return f"{left_text} {kind.value} {right_text}"

    if left.kind in _SUMS:
        left_text = f"({left_text})"
    if kind == NodeKind.MULTIPLY:
        if right.kind in _SUMS + _PRODUCTS:
            right_text = f"({right_text})"
        return f"{left_text}*{right_text}"
    # A bare integer after '/' would merge into a rational literal.
    if right.kind != NodeKind.IDENTIFIER:
        right_text = f"({right_text})"
    return f"{left_text}/{right_text}"


def _is_plain_rational(ast: ExprAst) -> bool:
    return ast.kind == NodeKind.RATIONAL and ast.value >= 0


def _format_rational(ast: ExprAst) -> str:
    value = ast.value
    text = str(abs(value.numerator)) if value.denominator == 1 \
        else f"{abs(value.numerator)}/{value.denominator}"
    return f"(-{text})" if value < 0 else text

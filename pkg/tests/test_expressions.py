"""
Test Expression Language

Parsing, error positions, exact evaluation and the print/parse round trip
of the family-definition expression language.
"""

import os
import sys
from fractions import Fraction

import pytest

# Add the src directory to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import IndeterminateRing, XPoly
from expressions import (
    EvaluationError,
    ExprAst,
    NodeKind,
    ParseError,
    eval_to_ratfun,
    evaluate_source,
    format_expr,
    parse,
    tokenize,
)


RING = IndeterminateRing(["tau", "lambda", "rho"])


def test_tokenize_positions():
    tokens = tokenize("2*x + rho")
    assert [t.text for t in tokens] == ["2", "*", "x", "+", "rho", ""]
    assert tokens[4].position == 6
    assert tokens[-1].kind == 'END'


def test_precedence_and_associativity():
    ast = parse("1 - x - n")
    assert ast.kind == NodeKind.SUBTRACT
    assert ast.children[0].kind == NodeKind.SUBTRACT

    ast = parse("2*x^3")
    assert ast.kind == NodeKind.MULTIPLY
    assert ast.children[1].kind == NodeKind.POWER


def test_unary_minus_binds_looser_than_power():
    assert parse("-x^2") == ExprAst.negate(ExprAst.power(ExprAst.identifier("x"), 2))
    assert evaluate_source("-x^2", RING) == -(XPoly.x(RING) ** 2)
    assert evaluate_source("2*-x^2", RING) == (XPoly.x(RING) ** 2).scale(-2)
    assert evaluate_source("(-x)^2", RING) == XPoly.x(RING) ** 2


def test_rational_literal():
    ast = parse("3/4")
    assert ast.kind == NodeKind.RATIONAL
    assert ast.value == Fraction(3, 4)


@pytest.mark.parametrize("source, position", [
    ("2*y", 2),
    ("x $ 1", 2),
    ("(x+1", 4),
    ("x+1)", 3),
    ("x^n", 2),
    ("x^2^3", 3),
    ("", 0),
    ("1/0", 2),
])
def test_parse_errors_carry_position(source, position):
    with pytest.raises(ParseError) as excinfo:
        parse(source)
    assert excinfo.value.position == position


def test_parse_error_message_points_at_offending_character():
    with pytest.raises(ParseError) as excinfo:
        parse("x + mu", ["tau"])
    message = str(excinfo.value)
    assert "Unknown identifier 'mu'" in message
    assert message.splitlines()[-1].strip() == "^"


def test_declared_parameters_are_identifiers():
    ast = parse("rho*(tau+1)/2", ["tau", "rho"])
    assert ast.identifiers() == frozenset({"rho", "tau"})


def test_evaluation_is_exact():
    value = evaluate_source("2*(rho-1)/rho*x^2 + 1/3", RING)
    assert value.degree == 2
    assert value.coeff(0).constant_value() == Fraction(1, 3)
    assert value.at_index(5) == value


def test_division_by_zero_expression():
    with pytest.raises(EvaluationError):
        eval_to_ratfun(parse("1/(n-n)"), RING)


def test_x_in_denominator_is_not_polynomial():
    with pytest.raises(EvaluationError):
        evaluate_source("1/x", RING)
    ratfun = evaluate_source("1/x", RING, as_xpoly=False)
    assert ratfun.den.depends_on("x")


def test_identifier_outside_ring():
    with pytest.raises(EvaluationError):
        eval_to_ratfun(parse("mu", ["mu"]), RING)


@pytest.mark.parametrize("source", [
    "2*(rho-1)/rho*x^2 + 2*lambda*(2-rho)/rho*x + 1 - rho*(tau+1) - 2*lambda^2/rho",
    "-(n+tau+1)*(n-1)/((2*n+tau+1)*(2*n+tau+2))",
    "(x-1)^2 - -x",
    "-x^2 + (-x)^3",
    "x/(n/2)",
    "1/2*x - 3",
])
def test_printed_expression_reparses_to_same_tree(source):
    params = RING.params
    ast = parse(source, params)
    assert parse(format_expr(ast), params) == ast

"""
Test Reduction and Emission

Common-factor extraction from derived equations and their rendering as
plain text and LaTeX.
"""

import os
import sys
from fractions import Fraction

import pytest

# Add the src directory to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from derivation import BranchDeriver, OdeResult, build_relations
from expressions import evaluate_source
from families import FamilyLoader
from pipeline import goldens_from_document
from reduction import (
    DegenerateOdeError,
    LatexRenderer,
    TextRenderer,
    emit,
    format_coefficient,
    get_renderer,
    joint_content,
    leading_sign,
    reduce_ode,
)


FAMILY_DIR = os.path.join(os.path.dirname(__file__), '..', 'config', 'families')

loader = FamilyLoader(FAMILY_DIR)


def derivation(name, tag):
    f = loader.load_family(name)
    deriver = BranchDeriver(f)
    for branch in deriver.branches():
        if branch.tag == tag:
            return f, deriver.derive(branch)
    raise AssertionError(f"No branch {tag} for {name}")


def mp(source, f):
    return evaluate_source(source, f.ring).value.num


def test_hermite_second_order_reduction():
    f, result = derivation('hermite_classical', 'r0m1')
    reduced = reduce_ode(result.reduction('semiclassical_II', 2))
    expected = tuple(evaluate_source(s, f.ring) for s in ("1", "-2*x", "2*(n+1)"))
    assert reduced.coeffs == expected
    assert reduced.order == 2
    assert emit(reduced.common) == "-2"
    for original, value in zip(reduced.ode.coeffs, reduced.coeffs):
        assert value.scale(reduced.common) == original


def test_reduction_is_idempotent():
    _, result = derivation('hermite_classical', 'r0m1')
    once = reduce_ode(result.reduction('semiclassical', 4))
    again = reduce_ode(OdeResult(order=4, coeffs=once.coeffs, branch=once.branch, kind='semiclassical'))
    assert again.coeffs == once.coeffs
    assert emit(again.common) == "1"


def test_first_form_loses_index_factor():
    f, result = derivation('hermite_classical', 'r0m1')
    reduced = reduce_ode(result.reduction('semiclassical_I', 2))
    assert reduced.factor == mp("n+1", f)
    assert reduced.coeffs[1] == evaluate_source("-2*x", f.ring)


def test_degenerate_equation_cannot_be_reduced():
    _, result = derivation('hermite_classical', 'r0m1')
    with pytest.raises(DegenerateOdeError):
        reduce_ode(result.ode4)
    assert emit(result.ode4) == "0 = 0"


def test_case2_common_factor_on_generic_branch():
    f, result = derivation('hermite_case2', 'r0m1')
    reduced = reduce_ode(result.ode4)
    assert reduced.factor == mp("n^2", f)
    assert reduced.unit.is_constant
    assert abs(reduced.unit.constant_value()) == 4
    assert format_coefficient(reduced.coeffs[0]).startswith("8*(n+1)*x^4")


def test_case2_common_factor_at_index_zero():
    f, result = derivation('hermite_case2', 'n0')
    reduced = reduce_ode(result.ode4)
    assert reduced.factor == mp("rho^2", f)
    assert abs(reduced.unit.constant_value()) == 4


def test_reduced_coefficients_are_primitive_with_positive_lead():
    _, result = derivation('hermite_case1', 'r0m1')
    reduced = reduce_ode(result.ode4)
    numerators = [c.value.num for c in reduced.coeffs]
    assert all(c.value.den.is_constant for c in reduced.coeffs)
    assert joint_content(numerators) == 1
    assert leading_sign(numerators) == 1
    for original, value in zip(reduced.ode.coeffs, reduced.coeffs):
        assert value.scale(reduced.common) == original


def test_joint_content_and_sign():
    f = loader.load_family('hermite_case1')
    polys = [mp("-6*x^2 + 3*n", f), mp("9/2*x", f)]
    assert joint_content(polys) == Fraction(3, 2)
    assert leading_sign(polys) == -1
    assert leading_sign([mp("0", f), mp("x-5", f)]) == 1


# Emission

def test_text_equation():
    _, result = derivation('hermite_classical', 'r0m1')
    reduced = reduce_ode(result.reduction('semiclassical_II', 2))
    assert emit(reduced) == "P'' - 2*x*P' + 2*(n+1)*P = 0"


def test_latex_equation():
    _, result = derivation('hermite_classical', 'r0m1')
    reduced = reduce_ode(result.reduction('semiclassical_II', 2))
    assert emit(reduced, fmt='latex') == (
        "P^{\\prime\\prime} - 2 x P^{\\prime} + 2 \\left(n + 1\\right) P = 0")


def test_fourth_derivative_marks():
    assert TextRenderer().derivative(4) == "P^(4)"
    assert TextRenderer().derivative(0) == "P"
    assert LatexRenderer().derivative(4) == "P^{(4)}"


def test_published_coefficient_keeps_its_sign():
    f = loader.load_family('hermite_case2')
    golden = goldens_from_document(loader.load_document('hermite_case2'))[0]
    leading = golden.parse(f.ring)[0]
    assert format_coefficient(leading).startswith("-8*(n+1)*x^4")


def test_coefficient_over_denominator():
    f = loader.load_family('hermite_case1')
    assert format_coefficient(evaluate_source("2*(rho-1)/rho*x^2 - 1", f.ring)) == "(2*(rho-1)/rho)*x^2 - 1"
    assert format_coefficient(evaluate_source("x/rho", f.ring)) == "(1/rho)*x"


def test_latex_symbols():
    renderer = LatexRenderer()
    assert renderer.symbol('lambda') == "\\lambda"
    assert renderer.symbol('a_1') == "a_{1}"
    assert renderer.number(Fraction(-1, 2)) == "\\frac{-1}{2}"
    assert renderer.label("Phi^3") == "\\Phi^{3}"
    assert renderer.label("M01") == "M_{01}"


def test_relation_emission():
    f = loader.load_family('hermite_classical')
    branch = f.relation_branches()[0]
    lines = emit(build_relations(f, branch)[0]).splitlines()
    assert lines == ["G01 = 0", "G11 = 0", "H1 = (n+1)", "M01 = 0", "Phi^1 = 1"]


def test_unknown_format_and_object():
    with pytest.raises(ValueError):
        get_renderer('html')
    with pytest.raises(TypeError):
        emit(object())

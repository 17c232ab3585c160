"""
Test Exact Oracle

Recurrence-generated polynomials, the residual checks and certification of
every equation derived for the bundled families.
"""

import copy
import os
import sys
from dataclasses import replace
from fractions import Fraction

import pytest

# Add the src directory to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from derivation import BranchDeriver
from families import FamilyLoader, RelationBranch, load_family
from oracle import (
    BranchMismatchError,
    NumericContext,
    OracleError,
    OracleVerifier,
    QPoly,
    RegularityError,
    associated1,
    check_ode,
    check_relations,
    check_rsimp,
    iterate_CD,
    prepare_data,
    ttrr,
    verify_family,
    witness_polynomials,
)
from reduction import reduce_ode


FAMILY_DIR = os.path.join(os.path.dirname(__file__), '..', 'config', 'families')
BUNDLED = ['hermite_case1', 'hermite_case2', 'hermite_classical', 'semiclassical_class1']

loader = FamilyLoader(FAMILY_DIR)


def derived_equations(f):
    equations, relations = [], {}
    for branch, result in BranchDeriver(f).derive_all().items():
        relations[branch] = result.relations
        for ode in result.equations:
            equations.append(ode)
            if not ode.degenerate:
                equations.append(reduce_ode(ode))
    return equations, relations


# Generators

def test_qpoly_arithmetic_and_printing():
    x = QPoly.x()
    p = x * x - Fraction(1, 2)
    assert str(p) == "x^2-1/2"
    assert p(1) == Fraction(1, 2)
    assert p.derivative() == x.scale(2)
    assert str(QPoly.zero()) == "0"
    assert (p - p).is_zero


def test_hermite_polynomials():
    polys = ttrr([Fraction(0)] * 4, [Fraction(1), Fraction(1, 2), Fraction(1), Fraction(3, 2)], 3)
    assert [str(p) for p in polys] == ["1", "x", "x^2-1/2", "x^3-3/2*x"]


def test_associated_polynomials_shift_the_coefficients():
    gammas = [Fraction(1), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
    polys = associated1([Fraction(0)] * 5, gammas, 3)
    assert [str(p) for p in polys] == ["1", "x", "x^2-1", "x^3-5/2*x"]


def test_case2_witness_polynomials():
    f = loader.load_family('hermite_case2')
    ctx = NumericContext.for_family(f, n_max=2)
    assert ctx.assignment == {'lambda': Fraction(1), 'rho': Fraction(3)}
    witnesses = witness_polynomials(f, ctx)
    assert str(witnesses.P[2]) == "x^2-x-3/2"
    assert str(witnesses.P1[2]) == "x^2-1/2"
    assert all(p.is_monic for p in witnesses.P)


def test_iterated_coefficients_match_closed_forms():
    for name in BUNDLED:
        f = loader.load_family(name)
        assert iterate_CD(f, NumericContext.for_family(f, n_max=8)).agrees


# Context

def test_context_overrides_and_validation():
    f = loader.load_family('hermite_case1')
    ctx = NumericContext.for_family(f, {'tau': '1/3'}, n_max=4)
    assert ctx.assignment['tau'] == Fraction(1, 3)
    assert ctx.to_dict() == {'assignment': {'lambda': '1/2', 'rho': '2', 'tau': '1/3'}, 'n_max': 4}
    with pytest.raises(OracleError):
        NumericContext({'tau': 1}, 4).validate(f)
    with pytest.raises(OracleError):
        NumericContext.for_family(f, {'mu': 1})
    with pytest.raises(OracleError):
        NumericContext({}, -1)


def test_vanishing_gamma_is_a_regularity_error():
    f = loader.load_family('hermite_case1')
    with pytest.raises(RegularityError):
        NumericContext.for_family(f, {'tau': -3})


# Checks

@pytest.mark.parametrize("name", BUNDLED)
def test_structure_relations_and_partial_sums(name):
    f = loader.load_family(name)
    ctx = NumericContext.for_family(f, n_max=8)
    assert check_relations(f, ctx).passed
    assert check_rsimp(f, ctx).passed


@pytest.mark.parametrize("name", BUNDLED)
def test_every_derived_equation_is_certified(name):
    f = loader.load_family(name)
    equations, relations = derived_equations(f)
    report = OracleVerifier(f, NumericContext.for_family(f, n_max=8)).verify(equations, relations)
    assert report.passed, report.summary()
    checks = {entry.check for entry in report.entries}
    assert {'R1', 'R4', 'S4', 'R-simp'} <= checks
    assert "ode:laguerre_hahn:4" in checks


def test_wrong_B_fails_only_the_relations_that_carry_it():
    f = loader.load_family('hermite_case1')
    ctx = NumericContext.for_family(f, n_max=2)
    data = prepare_data(f, ctx)
    doubled = replace(data, B=data.B.scale(2))
    report = check_relations(f, ctx, data=doubled)
    assert {entry.check for entry in report.failures()} == {'R2', 'R4'}


def test_sign_flipped_B_leaves_residual_at_index_zero():
    f = loader.load_family('hermite_case1')
    ctx = NumericContext.for_family(f, n_max=1)
    data = prepare_data(f, ctx)
    report = check_relations(f, ctx, data=replace(data, B=-data.B))
    entry = next(e for e in report.entries if e.check == 'R4' and e.index == 0)
    assert not entry.is_zero
    assert entry.residual == data.B.scale(2)
    assert not report.passed


def test_equation_on_other_branch_is_rejected():
    f = loader.load_family('semiclassical_class1')
    ctx = NumericContext.for_family(f, n_max=4)
    result = BranchDeriver(f).derive(f.relation_branches()[1])
    ode = result.reduction('semiclassical_II', 2)
    assert check_ode(f, ctx, ode, indices=[1, 3]).passed
    with pytest.raises(BranchMismatchError):
        check_ode(f, ctx, ode, indices=[2])
    with pytest.raises(BranchMismatchError):
        check_ode(f, ctx, ode, indices=[7])


def test_equation_with_wrong_modulus_is_rejected():
    f = loader.load_family('semiclassical_class1')
    hermite = loader.load_family('hermite_classical')
    ode = BranchDeriver(hermite).derive(RelationBranch(0, 1, 0)).reduction('classical', 2)
    with pytest.raises(BranchMismatchError):
        check_ode(f, NumericContext.for_family(f, n_max=2), ode)


def test_corrupt_family_is_reported():
    document = copy.deepcopy(loader.load_document('hermite_classical'))
    document['D_seq']['branches'][0]['expr'] = "2"
    f = load_family(document)
    report = verify_family(f, NumericContext.for_family(f, n_max=3))
    assert not report.passed
    assert report.mismatches
    assert report.mismatches[0].sequence == 'D'
    assert "closed-form mismatches" in report.summary()
    assert report.to_dict()['passed'] is False


def test_report_with_witnesses():
    f = loader.load_family('hermite_classical')
    report = verify_family(f, NumericContext.for_family(f, n_max=2), include_witnesses=True)
    assert report.passed
    data = report.to_dict()
    assert data['witnesses']['P'][:3] == ["1", "x", "x^2-1/2"]
    assert all(entry['residual_is_zero'] for entry in data['residuals'])

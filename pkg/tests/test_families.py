"""
Test Family Model

Loading of the bundled family files, sequence coverage rules, branch
planning, the transformations on family data and the symbolic check of the
C/D recurrences.
"""

import copy
import inspect
import json
import os
import sys
from fractions import Fraction

import pytest

# Add the src directory to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra import IndeterminateRing, InvalidAffineError, XPoly
from expressions import evaluate_source
from families import (
    CoverageError,
    FamilyError,
    FamilyLoader,
    FamilySchemaError,
    IndexDomainError,
    OverlapError,
    ParamSeq,
    SeqBranch,
    affine_shift_family,
    associated_shift,
    class_degrees,
    load_family,
    perturb_recurrence,
    psi_of,
    seq_at,
    seq_branch,
    specialize_family,
    verify_sr_recurrences,
)


FAMILY_DIR = os.path.join(os.path.dirname(__file__), '..', 'config', 'families')
BUNDLED = ['hermite_case1', 'hermite_case2', 'hermite_classical', 'semiclassical_class1']


@pytest.fixture
def loader():
    return FamilyLoader(FAMILY_DIR)


def xp(source: str, ring: IndeterminateRing) -> XPoly:
    return evaluate_source(source, ring)


def hermite_document(loader) -> dict:
    return copy.deepcopy(loader.load_document('hermite_classical'))


# Loading

def test_bundled_families_are_listed(loader):
    assert loader.list_available_families() == BUNDLED


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_family_loads(loader, name):
    family = loader.load_family(name)
    assert family.name == name
    assert loader.validate_document(name)


def test_family_fields(loader):
    f = loader.load_family('hermite_case1')
    assert f.params == ('tau', 'lambda', 'rho')
    assert f.modulus == 1
    assert not f.is_semiclassical
    assert f.assignments == {'tau': Fraction(1), 'lambda': Fraction(1, 2), 'rho': Fraction(2)}
    assert f.gamma.at(1) == xp("rho*(tau+1)/2", f.ring)
    assert f.gamma.at(4) == xp("(tau+4)/2", f.ring)
    assert f.beta.at(0) == xp("lambda", f.ring)
    assert f.d_full.at(-1) == f.B
    assert f.c_full.at(0) == f.C
    assert f.gamma_full.at(0) == XPoly.one(f.ring)


def test_missing_file(loader):
    with pytest.raises(FileNotFoundError):
        loader.load_family('no_such_family')
    assert not loader.validate_document('no_such_family')


def test_invalid_json(loader, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding='utf-8')
    with pytest.raises(FamilySchemaError):
        loader.load_family(str(path))


def test_family_file_by_path(loader, tmp_path):
    path = tmp_path / "copy.json"
    path.write_text(json.dumps(hermite_document(loader)), encoding='utf-8')
    assert loader.load_family(str(path)).name == 'hermite_classical'


def test_missing_required_field(loader):
    doc = hermite_document(loader)
    del doc['gamma']
    with pytest.raises(FamilySchemaError):
        load_family(doc)


def test_unparsable_expression(loader):
    doc = hermite_document(loader)
    doc['C'] = "-2*x +"
    with pytest.raises(FamilySchemaError):
        load_family(doc)


def test_undeclared_identifier(loader):
    doc = hermite_document(loader)
    doc['B'] = "mu*x"
    with pytest.raises(FamilySchemaError):
        load_family(doc)


def test_coverage_gap(loader):
    doc = hermite_document(loader)
    doc['gamma']['branches'][0]['min_index'] = 3
    with pytest.raises(CoverageError) as excinfo:
        load_family(doc)
    assert excinfo.value.index == 1


def test_missing_residue(loader):
    doc = hermite_document(loader)
    doc['gamma']['branches'] = [{"residue": 0, "modulus": 2, "min_index": 2, "expr": "n"}]
    with pytest.raises(CoverageError) as excinfo:
        load_family(doc)
    assert excinfo.value.index == 1


def test_overlapping_branches(loader):
    doc = hermite_document(loader)
    doc['gamma']['branches'].append({"residue": 0, "modulus": 1, "min_index": 1, "expr": "n"})
    with pytest.raises(OverlapError):
        load_family(doc)


def test_exceptional_entry_below_domain(loader):
    doc = hermite_document(loader)
    doc['gamma']['exceptional'] = {"0": "1"}
    with pytest.raises(IndexDomainError):
        load_family(doc)


def test_zero_phi_is_rejected(loader):
    doc = hermite_document(loader)
    doc['phi'] = "0"
    with pytest.raises(FamilySchemaError):
        load_family(doc)


# Sequences

RING = IndeterminateRing(["a"])


def parity_sequence() -> ParamSeq:
    return ParamSeq(
        name='s',
        start=0,
        branches=(
            SeqBranch(1, 2, 1, xp("n+a", RING)),
            SeqBranch(0, 2, 2, xp("2*n", RING)),
        ),
        exceptional={0: xp("a", RING)},
    )


def test_sequence_values_by_branch():
    s = parity_sequence()
    assert s.modulus == 2
    assert seq_at(s, 0) == xp("a", RING)
    assert seq_at(s, 4) == xp("4", RING)
    assert seq_at(s, 5) == xp("2+a", RING)
    with pytest.raises(IndexDomainError):
        seq_at(s, -1)


def test_sequence_closed_forms():
    s = parity_sequence()
    assert seq_branch(s, 1) == xp("n+a", RING)
    assert seq_branch(s, 1, shift=1) == xp("2*n+2", RING)
    assert s.closed_form(0, 1, modulus=4) == xp("2*n+a", RING)


def test_generic_start_respects_exceptional_entries():
    s = parity_sequence()
    assert s.generic_start(0) == 1
    assert s.with_entries({0: xp("0", RING)}).generic_start(0) == 0
    assert s.generic_start(1) == 0


def test_shifted_sequence():
    s = parity_sequence()
    shifted = s.shifted(1)
    for index in range(0, 8):
        assert shifted.at(index) == s.at(index + 1)
    with pytest.raises(ValueError):
        s.shifted(-1)


def test_invalid_branch_residue():
    with pytest.raises(FamilySchemaError):
        SeqBranch(2, 2, 0, xp("n", RING))


# Branch planning

@pytest.mark.parametrize("name, tags", [
    ('hermite_case1', ['n0', 'r0m1']),
    ('hermite_case2', ['n0', 'r0m1']),
    ('hermite_classical', ['r0m1']),
    ('semiclassical_class1', ['r0m2', 'r1m2']),
])
def test_relation_branches(loader, name, tags):
    branches = loader.load_family(name).relation_branches()
    assert [b.tag for b in branches] == tags


def test_branch_labels_and_indices(loader):
    odd = loader.load_family('semiclassical_class1').relation_branches()[1]
    assert odd.label == "2n+1 (index >= 1)"
    assert odd.matches(5) and not odd.matches(4)
    assert odd.k_of(5) == 2
    with pytest.raises(ValueError):
        odd.k_of(4)


def test_relation_branches_for_one_residue(loader):
    f = loader.load_family('semiclassical_class1')
    assert [b.tag for b in f.relation_branches([1])] == ['r1m2']
    with pytest.raises(ValueError):
        f.relation_branches([2])


# Transformations

@pytest.mark.parametrize("name, expected", [
    ('hermite_case1', {'deg_phi': 0, 'deg_psi': 1, 'deg_B': 2, 's': 0, 'semiclassical': False}),
    ('hermite_case2', {'deg_phi': 0, 'deg_psi': 1, 'deg_B': 2, 's': 0, 'semiclassical': False}),
    ('hermite_classical', {'deg_phi': 0, 'deg_psi': 1, 'deg_B': None, 's': 0, 'semiclassical': True}),
    ('semiclassical_class1', {'deg_phi': 3, 'deg_psi': 2, 'deg_B': None, 's': 1, 'semiclassical': True}),
])
def test_class_degrees(loader, name, expected):
    assert class_degrees(loader.load_family(name)).to_dict() == expected


def test_psi_of_class_one_family(loader):
    f = loader.load_family('semiclassical_class1')
    assert psi_of(f) == xp("-(2*alpha+2*beta+4)*x^2 + x + 2*beta + 1", f.ring)


def test_specialization_reproduces_classical_hermite(loader):
    case1 = loader.load_family('hermite_case1')
    classical = loader.load_family('hermite_classical')
    f = specialize_family(case1, {'tau': 0, 'lambda': 0, 'rho': 1})
    assert f.params == ()
    assert f.ring == classical.ring
    for field in ('phi', 'B', 'C', 'D'):
        assert getattr(f, field) == getattr(classical, field)
    for k in range(1, 6):
        assert f.gamma.at(k) == classical.gamma.at(k)
        assert f.beta.at(k - 1) == classical.beta.at(k - 1)
    assert f.is_semiclassical


def test_partial_specialization_keeps_other_parameters(loader):
    f = specialize_family(loader.load_family('hermite_case1'), {'rho': '1'})
    assert f.params == ('tau', 'lambda')
    assert 'rho' not in f.assignments
    with pytest.raises(FamilySchemaError):
        specialize_family(f, {'rho': 1})


def test_affine_shift_transforms_phi_psi_and_B(loader):
    f = loader.load_family('hermite_classical')
    assert affine_shift_family(f, 1, 0) is f
    shifted = affine_shift_family(f, 2, 1)
    assert shifted.stale_sequences
    assert shifted.phi == f.phi
    assert psi_of(shifted) == xp("8*x+4", f.ring)
    assert shifted.C == xp("-8*x-4", f.ring)
    assert class_degrees(shifted).s == class_degrees(f).s
    with pytest.raises(InvalidAffineError):
        affine_shift_family(f, 0, 1)


def test_perturbation_of_order_one(loader):
    f = loader.load_family('hermite_classical')
    beta, gamma = perturb_recurrence(f.beta, f.gamma, 1, [0], [2], 1)
    assert beta.at(0) == xp("1", f.ring)
    assert beta.at(1) == f.beta.at(1)
    assert gamma.at(1) == xp("1", f.ring)
    assert gamma.at(2) == f.gamma.at(2)
    with pytest.raises(FamilyError):
        perturb_recurrence(f.beta, f.gamma, 0, [0], [0], 1)
    with pytest.raises(FamilyError):
        perturb_recurrence(f.beta, f.gamma, 0, [], [], 1)


def test_associated_shift(loader):
    f = loader.load_family('hermite_case1')
    beta, gamma = associated_shift(f.beta, f.gamma, 1)
    for k in range(0, 6):
        assert beta.at(k) == f.beta.at(k + 1)
    for k in range(1, 6):
        assert gamma.at(k) == f.gamma.at(k + 1)


# Recurrence verification

@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_families_satisfy_recurrences(loader, name):
    report = verify_sr_recurrences(loader.load_family(name))
    assert report.passed
    assert report.first_failure() is None
    assert report.to_dict()['passed'] is True


def test_sign_flipped_D_is_reported(loader):
    doc = hermite_document(loader)
    doc['D_seq']['branches'][0]['expr'] = "2"
    report = verify_sr_recurrences(load_family(doc))
    assert not report.passed
    failure = report.first_failure()
    assert failure is not None
    assert not failure.sr2_residual.is_zero


# Public API

def test_exported_transforms_match_the_module():
    import families
    from families import transforms
    defined = {name for name, value in vars(transforms).items()
               if inspect.isfunction(value) and value.__module__ == transforms.__name__
               and not name.startswith('_')}
    assert defined == {'psi_of', 'class_degrees', 'affine_shift_family', 'perturb_recurrence',
                       'associated_shift', 'specialize_family'}
    assert defined <= set(families.__all__)

"""
Family Data Models

This module contains the dataclasses describing a Laguerre-Hahn family:
the Riccati coefficients Phi, B, C, D, the recurrence coefficients and the
closed forms of C_n, D_n, plus the class report derived from them.

Models:
- LHFamily: Complete defining data of a family over its indeterminate ring
- ClassReport: Degrees of Phi, psi, B and the representation class s
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Dict, List, Optional, Tuple

from algebra import IndeterminateRing, XPoly

from .branches import RelationBranch, Requirement, plan_branches
from .errors import FamilySchemaError
from .sequences import ParamSeq


@dataclass(frozen=True)
class LHFamily:
    """
    Defining data of a Laguerre-Hahn family.

    gamma, c_seq and d_seq start at index 1, beta at index 0. C_0, D_0 are the
    scalar fields C and D, D_{-1} is B and gamma_0 is taken to be 1.
    """
    name: str
    params: Tuple[str, ...]
    ring: IndeterminateRing
    phi: XPoly
    B: XPoly
    C: XPoly
    D: XPoly
    beta: ParamSeq
    gamma: ParamSeq
    c_seq: ParamSeq
    d_seq: ParamSeq
    assignments: Dict[str, Fraction] = field(default_factory=dict)
    regularity_notes: str = ""
    stale_sequences: bool = False

    def __post_init__(self):
        if self.phi.is_zero:
            raise FamilySchemaError(f"Family '{self.name}': phi must be nonzero")
        for label, value in (('phi', self.phi), ('B', self.B), ('C', self.C), ('D', self.D)):
            if value.ring != self.ring:
                raise FamilySchemaError(f"Family '{self.name}': field {label} uses another ring")
        for seq in (self.beta, self.gamma, self.c_seq, self.d_seq):
            if seq.ring != self.ring:
                raise FamilySchemaError(f"Family '{self.name}': sequence {seq.name} uses another ring")
        if self.beta.start != 0:
            raise FamilySchemaError(f"Family '{self.name}': beta must start at index 0")
        for seq in (self.gamma, self.c_seq, self.d_seq):
            if seq.start != 1:
                raise FamilySchemaError(f"Family '{self.name}': {seq.name} must start at index 1")
        unknown = set(self.assignments) - set(self.params)
        if unknown:
            raise FamilySchemaError(f"Family '{self.name}': assignments for undeclared parameters {sorted(unknown)}")

    # Full sequences with the scalar fields as low-index entries

    @property
    def c_full(self) -> ParamSeq:
        """C_n for n >= 0."""
        return self.c_seq.extended(0, {0: self.C}, name='C')

    @property
    def d_full(self) -> ParamSeq:
        """D_n for n >= -1."""
        return self.d_seq.extended(-1, {-1: self.B, 0: self.D}, name='D')

    @property
    def gamma_full(self) -> ParamSeq:
        """gamma_n for n >= 0."""
        return self.gamma.extended(0, {0: XPoly.one(self.ring)}, name='gamma')

    @property
    def modulus(self) -> int:
        moduli = [s.modulus for s in (self.beta, self.gamma, self.c_seq, self.d_seq)]
        return reduce(lambda a, b: a * b // gcd(a, b), moduli)

    @property
    def is_semiclassical(self) -> bool:
        return self.B.is_zero

    # Branch planning

    def relation_requirements(self) -> List[Requirement]:
        """Sequence reads of the structure relations at index N."""
        return [(self.c_full, 1), (self.d_full, 1), (self.d_full, 0), (self.gamma_full, 1)]

    def recurrence_requirements(self) -> List[Requirement]:
        """Sequence reads of the C/D recurrences at index N."""
        return self.relation_requirements() + [
            (self.c_full, 0), (self.beta, 0), (self.gamma_full, 0), (self.d_full, -1)]

    def relation_branches(self, residues=None) -> List[RelationBranch]:
        return plan_branches(self.relation_requirements(), self.modulus, residues)

    def default_assignment(self) -> Dict[str, Fraction]:
        return dict(self.assignments)

    def with_changes(self, **changes) -> 'LHFamily':
        return replace(self, **changes)

    def summary(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'parameters': list(self.params),
            'phi': str(self.phi.value.num),
            'modulus': self.modulus,
            'semiclassical': self.is_semiclassical,
            'stale_sequences': self.stale_sequences,
        }


def _degree(p: XPoly) -> Optional[int]:
    """Degree in x with None standing for -infinity."""
    return None if p.is_zero else p.degree


@dataclass(frozen=True)
class ClassReport:
    """
    Degrees of Phi, psi and B and the class s of this representation.

    A degree of None stands for -infinity (the zero polynomial). s is None
    only when every degree is None.
    """
    deg_phi: Optional[int]
    deg_psi: Optional[int]
    deg_B: Optional[int]

    @property
    def s(self) -> Optional[int]:
        candidates = []
        if self.deg_psi is not None:
            candidates.append(self.deg_psi - 1)
        top = [d for d in (self.deg_phi, self.deg_B) if d is not None]
        if top:
            candidates.append(max(top) - 2)
        return max(candidates) if candidates else None

    @property
    def b_vanishes(self) -> bool:
        return self.deg_B is None

    @classmethod
    def of(cls, phi: XPoly, psi: XPoly, B: XPoly) -> 'ClassReport':
        return cls(_degree(phi), _degree(psi), _degree(B))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'deg_phi': self.deg_phi,
            'deg_psi': self.deg_psi,
            'deg_B': self.deg_B,
            's': self.s,
            'semiclassical': self.b_vanishes,
        }

"""
Branch Derivation Service

Runs every derivation that applies to a family on one branch: the four
structure relations, the fourth-order equation and, for semiclassical data,
the second-, third- and fourth-order reductions with the Wronskian and
classical forms.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from algebra import XPoly
from families import LHFamily, RelationBranch

from .errors import ClassicalRequiredError, DerivationError, RSimpViolationError
from .models import OdeResult, StructureRelation
from .ode import build_ode4
from .relations import build_relations_from_inputs, relation_inputs
from .semiclassical import (
    build_classical_ode,
    build_semiclassical_ode2,
    build_semiclassical_ode34,
    build_wronskian_form,
    sum_D_from_inputs,
)


@dataclass
class BranchDerivation:
    """Everything derived for one family on one branch."""
    family: str
    branch: RelationBranch
    relations: Tuple[StructureRelation, ...]
    ode4: OdeResult
    reductions: List[OdeResult] = field(default_factory=list)
    sum_D: Optional[XPoly] = None
    notes: List[str] = field(default_factory=list)

    @property
    def equations(self) -> List[OdeResult]:
        """Every equation derived, the fourth-order one first."""
        return [self.ode4] + self.reductions

    def reduction(self, kind: str, order: int) -> Optional[OdeResult]:
        for ode in self.reductions:
            if ode.kind == kind and ode.order == order:
                return ode
        return None


class BranchDeriver:
    """
    Derives structure relations and differential equations for a family.
    """

    def __init__(self, family: LHFamily):
        self.family = family
        self.logger = logging.getLogger(self.__class__.__name__)

    def branches(self, residues=None) -> List[RelationBranch]:
        return self.family.relation_branches(residues)

    def derive(self, branch: RelationBranch) -> BranchDerivation:
        """
        Run every applicable derivation on one branch.

        Raises:
            DerivationError: If the branch is not covered by the closed forms
        """
        f = self.family
        inputs = relation_inputs(f, branch)
        relations = build_relations_from_inputs(inputs)
        ode4 = build_ode4(relations, f, branch)
        result = BranchDerivation(f.name, branch, relations, ode4)
        try:
            result.sum_D = sum_D_from_inputs(inputs)
        except RSimpViolationError as e:
            self.logger.warning(f"'{f.name}' on {branch.label}: {e}")
            result.notes.append(f"partial-sum identity fails: {e}")

        if f.is_semiclassical:
            result.notes.append("B = 0: the fourth-order Laguerre-Hahn equation is identically zero; "
                                "semiclassical reductions follow")
            result.reductions.extend([
                build_semiclassical_ode2(f, branch, 'I', relations),
                build_semiclassical_ode2(f, branch, 'II'),
                build_semiclassical_ode34(f, branch, 3, relations),
                build_semiclassical_ode34(f, branch, 4, relations),
            ])
            if result.sum_D is not None:
                result.reductions.append(build_wronskian_form(f, branch))
                try:
                    result.reductions.append(build_classical_ode(f, branch))
                except ClassicalRequiredError as e:
                    self.logger.debug(f"No classical form on {branch.label}: {e}")

        self.logger.info(f"Derived '{f.name}' on {branch.label}: "
                         f"{len(result.equations)} equations, degenerate={ode4.degenerate}")
        return result

    def derive_all(self, residues=None) -> Dict[RelationBranch, BranchDerivation]:
        results = {}
        for branch in self.branches(residues):
            try:
                results[branch] = self.derive(branch)
            except DerivationError as e:
                self.logger.error(f"Derivation failed on {branch.label}: {e}")
                raise
        return results

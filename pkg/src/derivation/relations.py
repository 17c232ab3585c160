"""
Structure Relations

This module builds the four structure relations

    G_{0,k} P^(1)_{n-1} + G_{1,k} P^(1)_n + H_k P_n
        = Phi^k P^(k)_{n+1} + sum_{j<k} M_{j,k} P^(j)_{n+1},   k = 1..4

of a Laguerre-Hahn family on one branch. Level 1 is closed-form; each
further level differentiates the previous relation, multiplies by Phi and
eliminates the derivatives of P^(1)_{n-1}, P^(1)_n and P_n with the three
first-order relations they satisfy.
"""

import logging
from typing import List, Tuple

from algebra import XPoly
from families import CoverageError, IndexDomainError, LHFamily, RelationBranch

from .errors import BranchCoverageError
from .models import RelationInputs, StructureRelation


MAX_LEVEL = 4

logger = logging.getLogger(__name__)


def relation_inputs(f: LHFamily, branch: RelationBranch) -> RelationInputs:
    """
    Read C_{n+1}, D_{n+1}, D_n and gamma_{n+1} on a branch.

    Raises:
        BranchCoverageError: If the branch does not belong to the family
    """
    if branch.modulus != f.modulus:
        raise BranchCoverageError(
            f"Branch modulus {branch.modulus} differs from the family modulus {f.modulus}")
    if not branch.is_instance:
        first = max([0] + [seq.generic_start(branch.residue, shift, f.modulus)
                           for seq, shift in f.relation_requirements()])
        if branch.first_k < first:
            raise BranchCoverageError(
                f"Closed forms of '{f.name}' hold on residue {branch.residue} only from "
                f"index {f.modulus * first + branch.residue}, not {branch.min_index}")

    def read(seq, shift: int) -> XPoly:
        try:
            if branch.is_instance:
                return seq.at(branch.index + shift)
            return seq.closed_form(branch.residue, shift, f.modulus)
        except (CoverageError, IndexDomainError) as e:
            raise BranchCoverageError(f"Branch {branch.label}: {e}") from e

    return RelationInputs(
        branch=branch,
        phi=f.phi,
        B0=f.B,
        C0=f.C,
        D0=f.D,
        c_next=read(f.c_full, 1),
        d_next=read(f.d_full, 1),
        d_n=read(f.d_full, 0),
        g_next=read(f.gamma_full, 1),
    )


def first_relation(inputs: RelationInputs) -> StructureRelation:
    """B P^(1)_n - gamma_{n+1} D_{n+1} P_n = Phi P'_{n+1} - (C_{n+1} - C_0)/2 P_{n+1}."""
    ring = inputs.phi.ring
    return StructureRelation(
        level=1,
        G0=XPoly.zero(ring),
        G1=inputs.B0,
        H=-(inputs.g_next * inputs.d_next),
        M=(-inputs.c_gap,),
        phi_power=inputs.phi,
    )


def raise_level(rel: StructureRelation, inputs: RelationInputs) -> StructureRelation:
    """Relation of level k+1 from the relation of level k."""
    k = rel.level
    phi, dphi = inputs.phi, inputs.phi.d_dx()
    mean, gap = inputs.c_mean, inputs.c_gap
    g_d_next = inputs.g_next * inputs.d_next

    G0 = phi * rel.G0.d_dx() - gap * rel.G0 - g_d_next * rel.G1 + inputs.B0 * rel.H
    G1 = inputs.d_n * rel.G0 + mean * rel.G1 + phi * rel.G1.d_dx()
    H = -(inputs.D0 * rel.G0) + phi * rel.H.d_dx() - mean * rel.H

    M: List[XPoly] = [phi * rel.M[0].d_dx() + inputs.D0 * rel.G1 - inputs.d_n * rel.H]
    for j in range(1, k):
        M.append(phi * (rel.M[j].d_dx() + rel.M[j - 1]))
    # M_{k,k+1}: the derivative of Phi^k contributes k Phi^(k-1) Phi'.
    M.append(phi * (rel.M[k - 1] + (phi ** (k - 1)) * dphi * k))

    return StructureRelation(
        level=k + 1,
        G0=G0,
        G1=G1,
        H=H,
        M=tuple(M),
        phi_power=rel.phi_power * phi,
    )


def build_relations_from_inputs(inputs: RelationInputs, levels: int = MAX_LEVEL) -> Tuple[StructureRelation, ...]:
    relations = [first_relation(inputs)]
    while len(relations) < levels:
        relations.append(raise_level(relations[-1], inputs))
    return tuple(relations)


def build_relations(f: LHFamily, branch: RelationBranch) -> Tuple[StructureRelation, ...]:
    """
    The four structure relations of a family on one branch.

    Args:
        f: Family data
        branch: Generic branch or low-index instance from f.relation_branches()

    Returns:
        Relations of levels 1 to 4

    Raises:
        BranchCoverageError: If the branch is not covered by the closed forms
    """
    relations = build_relations_from_inputs(relation_inputs(f, branch))
    logger.debug(f"Built structure relations of '{f.name}' on {branch.label}")
    return relations

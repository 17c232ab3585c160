"""
Fourth-Order Differential Equation

The four structure relations are a linear system of four equations in the
three unknowns P^(1)_{n-1}, P^(1)_n and P_n. Its 4x4 augmented determinant
vanishes; expanding it along the right-hand-side column gives

    sum_k (-1)^k Delta_k F_k = 0,   F_k = sum_j M_{j,k} P^(j)_{n+1},

where Delta_k is the 3x3 minor that omits relation k. Collecting each
derivative order yields A P^(4)_{n+1} + B P^(3)_{n+1} + C P''_{n+1}
+ D P'_{n+1} + E P_{n+1} = 0.
"""

import logging
from typing import Sequence, Tuple

from algebra import XPoly
from families import LHFamily, RelationBranch

from .models import OdeResult, StructureRelation


logger = logging.getLogger(__name__)


def det3(rows: Sequence[Sequence[XPoly]]) -> XPoly:
    """Determinant of a 3x3 matrix by cofactor expansion along the first row."""
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def deltas(rels: Sequence[StructureRelation]) -> Tuple[XPoly, XPoly, XPoly, XPoly]:
    """Delta_1..Delta_4; Delta_k omits relation k from the (G0, G1, H) columns."""
    rows = [(r.G0, r.G1, r.H) for r in rels]
    return tuple(det3([row for j, row in enumerate(rows) if j != k]) for k in range(4))


def assemble_ode(rels: Sequence[StructureRelation], dets: Sequence[XPoly]) -> Tuple[XPoly, ...]:
    """Coefficients of P^(4)..P^(0): sum_k (-1)^k Delta_k M_{j,k} with M_{k,k} = Phi^k."""
    ring = rels[0].H.ring
    coeffs = []
    for j in range(4, -1, -1):
        total = XPoly.zero(ring)
        for k in range(max(j, 1), 5):
            term = dets[k - 1] * rels[k - 1].m(j)
            total = total + term if k % 2 == 0 else total - term
        coeffs.append(total)
    return tuple(coeffs)


def build_ode4(rels: Sequence[StructureRelation], f: LHFamily, branch: RelationBranch) -> OdeResult:
    """
    Fourth-order equation from the four structure relations.

    The result is flagged degenerate when all five coefficients vanish, which
    is always the case for semiclassical data (B = 0).
    """
    if len(rels) != 4:
        raise ValueError(f"build_ode4 needs four relations, got {len(rels)}")
    coeffs = assemble_ode(rels, deltas(rels))
    degenerate = all(c.is_zero for c in coeffs)
    if degenerate:
        logger.info(f"Fourth-order equation of '{f.name}' on {branch.label} is degenerate")
    return OdeResult(order=4, coeffs=coeffs, branch=branch, degenerate=degenerate,
                     kind='laguerre_hahn', family=f.name)

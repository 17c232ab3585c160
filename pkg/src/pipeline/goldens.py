"""
Golden Equation Comparison

Published coefficient tables are compared with derived equations up to a
common factor: expected and computed coefficient lists agree when every
cross product E_i C_j - E_j C_i vanishes. Family documents may carry such
tables under an optional "goldens" key:

    {"branch": "r0m1", "kind": "semiclassical", "order": 3,
     "coeffs": ["1", "0", "-4*x^2+2*n", "4*x*(n+1)"]}
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence

from algebra import IndeterminateRing, XPoly
from expressions import evaluate_source
from families import FamilySchemaError


logger = logging.getLogger(__name__)


def cross_products_agree(expected: Sequence[XPoly], computed: Sequence[XPoly]) -> bool:
    """True iff the two coefficient lists are proportional (and not one of them alone zero)."""
    if len(expected) != len(computed):
        return False
    if all(e.is_zero for e in expected) != all(c.is_zero for c in computed):
        return False
    for i in range(len(expected)):
        for j in range(i + 1, len(expected)):
            if not (expected[i] * computed[j] - expected[j] * computed[i]).is_zero:
                return False
    return True


@dataclass(frozen=True)
class GoldenEquation:
    branch: str
    kind: str
    order: int
    coeffs: Sequence[str]

    def parse(self, ring: IndeterminateRing) -> List[XPoly]:
        return [evaluate_source(source, ring) for source in self.coeffs]

    @property
    def key(self) -> str:
        return f"{self.branch}/{self.kind}/{self.order}"


@dataclass
class GoldenCheck:
    golden: GoldenEquation
    matches: bool
    certified: bool

    @property
    def discrepancy(self) -> bool:
        return not self.matches

    def to_dict(self) -> Dict[str, Any]:
        return {
            'golden': self.golden.key,
            'matches': self.matches,
            'certified': self.certified,
            'status': 'match' if self.matches else (
                'golden discrepancy (display suspected)' if self.certified else 'derived equation uncertified'),
        }


def goldens_from_document(document: Mapping[str, Any]) -> List[GoldenEquation]:
    """
    Read the optional "goldens" table of a family document.

    Raises:
        FamilySchemaError: If an entry lacks a field
    """
    entries = []
    for i, item in enumerate(document.get('goldens', [])):
        try:
            entries.append(GoldenEquation(str(item['branch']), str(item['kind']), int(item['order']),
                                          tuple(str(c) for c in item['coeffs'])))
        except (KeyError, TypeError, ValueError) as e:
            raise FamilySchemaError(f"Golden entry {i} is malformed: {e}") from e
    return entries


def compare_golden(golden: GoldenEquation, computed: Sequence[XPoly], certified: bool,
                   ring: IndeterminateRing) -> GoldenCheck:
    """Compare one golden table; a mismatch the oracle certifies is logged as a display discrepancy."""
    matches = cross_products_agree(golden.parse(ring), computed)
    check = GoldenCheck(golden, matches, certified)
    if not matches:
        if certified:
            logger.warning(f"Golden discrepancy for {golden.key}: the derived equation is certified "
                           f"by the oracle, the golden display is suspected")
        else:
            logger.error(f"Golden {golden.key} disagrees with a derived equation the oracle does not certify")
    return check


def find_equation(equations: Sequence[Any], golden: GoldenEquation) -> Optional[Any]:
    for ode in equations:
        base = getattr(ode, 'ode', ode)
        if base.branch.tag == golden.branch and base.kind == golden.kind and base.order == golden.order:
            return ode
    return None

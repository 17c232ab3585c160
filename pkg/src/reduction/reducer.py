"""
Common Factor Reduction

Divides the coefficients of a differential equation by their greatest common
factor c = u * g, where g is the primitive multivariate GCD of the cleared
numerators and u a rational-function unit. Reduced coefficients have integer
coefficients with no common content, and the leading term of the highest
derivative's coefficient (highest power of x, then graded-lex) is positive.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Dict, List, Sequence, Tuple

from algebra import MPoly, RatFun, XPoly, gcd_many, lcm_mpoly

from derivation import OdeResult

from .errors import DegenerateOdeError


@dataclass(frozen=True)
class ReducedOde:
    """An equation together with its common factor and reduced coefficients."""
    ode: OdeResult
    unit: RatFun
    factor: MPoly
    reduced: Tuple[XPoly, ...]

    @property
    def common(self) -> RatFun:
        """c = unit * factor"""
        return self.unit * self.factor

    @property
    def order(self) -> int:
        return self.ode.order

    @property
    def branch(self):
        return self.ode.branch

    @property
    def coeffs(self) -> Tuple[XPoly, ...]:
        return self.reduced

    def to_dict(self) -> Dict[str, Any]:
        data = self.ode.to_dict()
        data['reduced'] = True
        return data


def _lcm_int(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def joint_content(polys: Sequence[MPoly]) -> Fraction:
    """Positive rational content shared by all nonzero polynomials."""
    values = [c for p in polys if not p.is_zero for c in p.terms().values()]
    numerator = reduce(gcd, (abs(v.numerator) for v in values))
    denominator = reduce(_lcm_int, (v.denominator for v in values))
    return Fraction(numerator, denominator)


def leading_sign(polys: Sequence[MPoly]) -> int:
    """Sign of the leading term of the first nonzero polynomial, highest x power first."""
    for p in polys:
        if p.is_zero:
            continue
        grouped = p.coefficients_in('x')
        top = grouped[max(grouped)]
        return 1 if top.leading_coefficient > 0 else -1
    return 1


class OdeReducer:
    """Extracts the common factor of an equation's coefficients."""

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    def reduce(self, ode: OdeResult) -> ReducedOde:
        """
        Reduce an equation by the greatest common factor of its coefficients.

        Raises:
            DegenerateOdeError: If all coefficients vanish
        """
        if ode.degenerate or ode.all_zero:
            raise DegenerateOdeError(
                f"The {ode.title} has only zero coefficients; use the semiclassical reductions")

        values = [c.value for c in ode.coeffs]
        ring = values[0].ring
        common_den = reduce(lcm_mpoly, (v.den for v in values))
        numerators: List[MPoly] = [v.num * common_den.exquo(v.den) for v in values]

        _, factor = gcd_many([p for p in numerators if not p.is_zero]).primitive()
        quotients = [p.exquo(factor) for p in numerators]

        content = joint_content(quotients) * leading_sign(quotients)
        reduced = tuple(XPoly.from_mpoly(q.scale(1 / content)) for q in quotients)
        unit = RatFun.of(ring.constant(content), common_den)

        self.logger.debug(f"Reduced {ode.title}: factor {factor}, unit {unit}")
        return ReducedOde(ode=ode, unit=unit, factor=factor, reduced=reduced)


def reduce_ode(ode: OdeResult) -> ReducedOde:
    """Reduce `ode` by the greatest common factor of its coefficients."""
    return OdeReducer().reduce(ode)

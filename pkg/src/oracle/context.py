"""
Numeric Context

A NumericContext fixes rational values for every family parameter and the
largest relation index n_max to check. It converts symbolic family data
into dense rational polynomials.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional

from algebra import INDEX_VARIABLE, AlgebraError, XPoly, as_rational
from families import FamilyError, LHFamily, ParamSeq

from .errors import OracleError, RegularityError
from .qpoly import QPoly


DEFAULT_N_MAX = 8

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NumericContext:
    """Parameter values and the checked index range 0..n_max."""
    assignment: Mapping[str, Fraction] = field(default_factory=dict)
    n_max: int = DEFAULT_N_MAX

    def __post_init__(self):
        if self.n_max < 0:
            raise OracleError(f"n_max must be nonnegative, got {self.n_max}")
        object.__setattr__(self, 'assignment',
                           {name: as_rational(value) for name, value in sorted(self.assignment.items())})

    @classmethod
    def for_family(cls, f: LHFamily, overrides: Optional[Mapping[str, Any]] = None,
                   n_max: int = DEFAULT_N_MAX) -> 'NumericContext':
        """
        Context from the family's default assignments and explicit overrides.

        Raises:
            OracleError: If a parameter is left without a value
            RegularityError: If gamma_n vanishes for some 1 <= n <= n_max + 2
        """
        assignment: Dict[str, Fraction] = dict(f.default_assignment())
        assignment.update({k: as_rational(v) for k, v in (overrides or {}).items()})
        ctx = cls(assignment, n_max)
        ctx.validate(f)
        return ctx

    def validate(self, f: LHFamily) -> None:
        missing = [p for p in f.params if p not in self.assignment]
        if missing:
            raise OracleError(f"No values for parameters {missing} of '{f.name}'")
        unknown = sorted(set(self.assignment) - set(f.params))
        if unknown:
            raise OracleError(f"Values given for undeclared parameters {unknown} of '{f.name}'")
        for index in range(1, self.n_max + 3):
            if self.number(f.gamma, index) == 0:
                raise RegularityError(
                    f"gamma_{index} of '{f.name}' vanishes at {self.describe()}; "
                    f"regularity: {f.regularity_notes or 'not documented'}")
        logger.debug(f"Context {self.describe()} is regular for '{f.name}' up to n = {self.n_max}")

    def describe(self) -> str:
        values = ", ".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"[{values}]" if values else "[no parameters]"

    # Evaluation

    def qpoly(self, p: XPoly, n_value: Optional[int] = None) -> QPoly:
        """
        Evaluate parameters (and n when given) and convert to a QPoly.

        Raises:
            RegularityError: If the value has a pole at this context
        """
        assignment: Dict[str, Any] = dict(self.assignment)
        if n_value is not None:
            assignment[INDEX_VARIABLE] = n_value
        try:
            return QPoly.from_xpoly(p.evaluate(assignment))
        except AlgebraError as e:
            raise RegularityError(f"Value undefined at {self.describe()}, n={n_value}: {e}") from e
        except ValueError as e:
            raise OracleError(f"Value is not numeric at {self.describe()}, n={n_value}: {e}") from e

    def seq(self, seq: ParamSeq, index: int) -> QPoly:
        try:
            value = seq.at(index)
        except (AlgebraError, FamilyError) as e:
            raise RegularityError(f"{seq.name}_{index} undefined: {e}") from e
        return self.qpoly(value)

    def number(self, seq: ParamSeq, index: int) -> Fraction:
        value = self.seq(seq, index)
        if value.degree > 0:
            raise OracleError(f"{seq.name}_{index} depends on x")
        return value.leading_coefficient

    def to_dict(self) -> Dict[str, Any]:
        return {
            'assignment': {k: str(v) for k, v in self.assignment.items()},
            'n_max': self.n_max,
        }

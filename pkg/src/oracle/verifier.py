"""
Oracle Verification Service

Runs the numeric checks for one family and context and merges their
findings into a single report.
"""

import logging
from typing import Iterable, Optional

from families import LHFamily

from .checks import Equation, RelationTable, check_ode, check_relations, check_rsimp, prepare_data
from .context import NumericContext
from .models import OracleReport
from .generators import witness_polynomials


class OracleVerifier:
    """
    Certifies derived relations and equations of a family at concrete values.
    """

    def __init__(self, family: LHFamily, context: NumericContext):
        self.family = family
        self.context = context
        self.logger = logging.getLogger(self.__class__.__name__)
        self._data = None

    @property
    def data(self):
        if self._data is None:
            self._data = prepare_data(self.family, self.context)
        return self._data

    def verify(self, equations: Iterable[Equation] = (), relations: Optional[RelationTable] = None,
               include_witnesses: bool = False) -> OracleReport:
        """
        Run relation, partial-sum and equation checks.

        Args:
            equations: Derived or reduced equations to certify
            relations: Derived relations per branch, reused instead of rebuilt
            include_witnesses: Attach the generated P_n and P^(1)_n to the report
        """
        f, ctx = self.family, self.context
        self.logger.info(f"Verifying '{f.name}' at {ctx.describe()} for n <= {ctx.n_max}")

        report = check_relations(f, ctx, relations, self.data)
        report.extend(check_rsimp(f, ctx, self.data))
        for ode in equations:
            report.extend(check_ode(f, ctx, ode, data=self.data))
        if include_witnesses:
            report.witnesses = witness_polynomials(f, ctx)

        self.logger.info(report.summary())
        return report


def verify_family(f: LHFamily, ctx: Optional[NumericContext] = None, equations: Iterable[Equation] = (),
                  include_witnesses: bool = False) -> OracleReport:
    """Oracle report for a family at its default context unless one is given."""
    ctx = ctx or NumericContext.for_family(f)
    return OracleVerifier(f, ctx).verify(equations, include_witnesses=include_witnesses)

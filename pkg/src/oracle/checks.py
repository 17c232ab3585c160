"""
Exact Numeric Checks

Every check evaluates both sides of an identity at concrete indices with
polynomials from the recurrences and reports the exact residual:

- R1..R4: the first-order relations of P^(1)_{n-1}, P_n, P^(1)_n and P_{n+1},
  using C_n, D_n from iteration;
- S1..S4: the derived structure relations of levels 1..4;
- R-simp: gamma_{n+1} D_n D_{n+1} - (C_{n+1}^2 - C_0^2)/4 - B D_0 + Phi sum D_nu;
- derived differential equations, at n := k on their branch.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Union

from derivation import OdeResult, StructureRelation, build_relations
from families import LHFamily, RelationBranch
from reduction import ReducedOde

from .context import NumericContext
from .errors import BranchMismatchError
from .generators import associated1, iterate_CD, recurrence_coefficients, ttrr
from .models import CDIteration, OracleReport, ResidualEntry
from .qpoly import QPoly, combine


_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)

logger = logging.getLogger(__name__)

RelationTable = Mapping[RelationBranch, Sequence[StructureRelation]]


@dataclass
class OracleData:
    """Everything the checks read, generated once per context."""
    P: List[QPoly]
    P1: List[QPoly]
    cd: CDIteration
    gammas: List[Fraction]
    phi: QPoly
    B: QPoly

    @property
    def C0(self) -> QPoly:
        return self.cd.C[0]

    @property
    def D0(self) -> QPoly:
        return self.cd.D[0]

    def p1(self, index: int) -> QPoly:
        """P^(1)_index with P^(1)_{-1} = 0."""
        return self.P1[index] if index >= 0 else QPoly.zero()


def prepare_data(f: LHFamily, ctx: NumericContext) -> OracleData:
    top = ctx.n_max + 1
    betas, gammas = recurrence_coefficients(f, ctx, top)
    return OracleData(
        P=ttrr(betas, gammas, top),
        P1=associated1(betas, gammas, ctx.n_max),
        cd=iterate_CD(f, ctx),
        gammas=gammas,
        phi=ctx.qpoly(f.phi),
        B=ctx.qpoly(f.B),
    )


def _report(f: LHFamily, ctx: NumericContext) -> OracleReport:
    return OracleReport(family=f.name, context=ctx.to_dict())


def check_relations(f: LHFamily, ctx: NumericContext, relations: Optional[RelationTable] = None,
                    data: Optional[OracleData] = None) -> OracleReport:
    """
    Residuals of R1..R4 and S1..S4 for every index 0..n_max.

    Args:
        f: Family data
        ctx: Validated numeric context
        relations: Derived relations per branch; built from f when omitted
        data: Generated polynomials, reused across checks when given
    """
    data = data or prepare_data(f, ctx)
    report = _report(f, ctx)
    report.mismatches.extend(data.cd.mismatches)
    table: Dict[RelationBranch, Sequence[StructureRelation]] = dict(relations or {})
    branches = f.relation_branches()
    phi, B, C0, D0 = data.phi, data.B, data.C0, data.D0

    for N in range(ctx.n_max + 1):
        P_n, P_next = data.P[N], data.P[N + 1]
        P1_n, P1_prev = data.p1(N), data.p1(N - 1)
        C_next, D_n, D_next = data.cd.C[N + 1], data.cd.D[N], data.cd.D[N + 1]
        g_next = data.gammas[N + 1]
        gap = (C_next - C0).scale(_HALF)
        mean = (C_next + C0).scale(_HALF)
        g_d_next = D_next.scale(g_next)

        residuals = {
            'R1': phi * P1_prev.derivative() + gap * P1_prev - D_n * P1_n + D0 * P_n,
            'R2': phi * P_n.derivative() - B * P1_prev + mean * P_n - D_n * P_next,
            'R3': phi * P1_n.derivative() + g_d_next * P1_prev - mean * P1_n + D0 * P_next,
            'R4': phi * P_next.derivative() - gap * P_next + g_d_next * P_n - B * P1_n,
        }
        for name, residual in residuals.items():
            report.entries.append(ResidualEntry(name, N, residual))

        branch = _branch_for(branches, N, f)
        if branch not in table:
            table[branch] = build_relations(f, branch)
        k = branch.k_of(N)
        for rel in table[branch]:
            lhs = combine([ctx.qpoly(c, k) for c in (rel.G0, rel.G1, rel.H)], [P1_prev, P1_n, P_n])
            rhs = combine([ctx.qpoly(rel.m(j), k) for j in range(rel.level + 1)],
                          [P_next.derivative(j) for j in range(rel.level + 1)])
            report.entries.append(ResidualEntry(f"S{rel.level}", N, lhs - rhs, branch.label))

    _log_outcome(report, "Structure relations")
    return report


def _branch_for(branches: Iterable[RelationBranch], index: int, f: LHFamily) -> RelationBranch:
    for branch in branches:
        if branch.matches(index):
            return branch
    raise BranchMismatchError(f"No relation branch of '{f.name}' covers index {index}")


def check_rsimp(f: LHFamily, ctx: NumericContext, data: Optional[OracleData] = None) -> OracleReport:
    """Residual of the partial-sum identity for every index 0..n_max."""
    data = data or prepare_data(f, ctx)
    report = _report(f, ctx)
    partial = QPoly.zero()
    for N in range(ctx.n_max + 1):
        C_next, D_n, D_next = data.cd.C[N + 1], data.cd.D[N], data.cd.D[N + 1]
        partial = partial + D_n
        residual = ((D_n * D_next).scale(data.gammas[N + 1])
                    - (C_next * C_next - data.C0 * data.C0).scale(_QUARTER)
                    - data.B * data.D0
                    + data.phi * partial)
        report.entries.append(ResidualEntry('R-simp', N, residual))
    _log_outcome(report, "Partial-sum identity")
    return report


Equation = Union[OdeResult, ReducedOde]


def equation_label(ode: Equation) -> str:
    base = ode.ode if isinstance(ode, ReducedOde) else ode
    return f"ode:{base.kind}:{base.order}"


def check_ode(f: LHFamily, ctx: NumericContext, ode: Equation, indices: Optional[Iterable[int]] = None,
              data: Optional[OracleData] = None) -> OracleReport:
    """
    Residual of sum_k coeff_k P^(order-k)_{N+1} at each relation index N of the branch.

    Args:
        f: Family data
        ctx: Validated numeric context
        ode: Derived or reduced equation
        indices: Relation indices to test; every index of the branch up to n_max when omitted

    Raises:
        BranchMismatchError: If the equation's branch does not cover a requested index,
            or covers none of 0..n_max
    """
    branch = ode.branch
    if branch.modulus != f.modulus:
        raise BranchMismatchError(
            f"Equation branch modulus {branch.modulus} differs from the family modulus {f.modulus}")
    if indices is None:
        indices = [N for N in range(ctx.n_max + 1) if branch.matches(N)]
        if not indices:
            raise BranchMismatchError(f"Branch {branch.label} has no index in 0..{ctx.n_max}")
    else:
        indices = list(indices)
        for N in indices:
            if not branch.matches(N) or N > ctx.n_max:
                raise BranchMismatchError(f"Index {N} is not on branch {branch.label} within 0..{ctx.n_max}")

    data = data or prepare_data(f, ctx)
    report = _report(f, ctx)
    label = equation_label(ode)
    degenerate = isinstance(ode, OdeResult) and ode.degenerate
    for N in indices:
        k = branch.k_of(N)
        coeffs = [ctx.qpoly(c, k) for c in ode.coeffs]
        P_next = data.P[N + 1]
        derivatives = [P_next.derivative(ode.order - i) for i in range(ode.order + 1)]
        report.entries.append(ResidualEntry(label, N, combine(coeffs, derivatives), branch.label))
        if degenerate:
            nonzero = next((c for c in coeffs if not c.is_zero), QPoly.zero())
            report.entries.append(ResidualEntry(f"{label}:coefficients", N, nonzero, branch.label))

    _log_outcome(report, f"Equation {label} on {branch.label}")
    return report


def _log_outcome(report: OracleReport, what: str) -> None:
    failures = report.failures()
    if failures:
        first = failures[0]
        logger.error(f"{what} of '{report.family}': {len(failures)} nonzero residuals, "
                     f"first {first.check} at n={first.index}")
    else:
        logger.debug(f"{what} of '{report.family}': {len(report.entries)} residuals zero")

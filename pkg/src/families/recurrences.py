"""
Symbolic Recurrence Verification

Checks the recurrences linking consecutive C_n, D_n of a family,

    C_{n+1} = -C_n + 2(x - beta_n) D_n
    gamma_{n+1} D_{n+1} = -Phi + gamma_n D_{n-1} - (x - beta_n) C_n + (x - beta_n)^2 D_n

on every generic branch and at every low index built by substitution.
A nonzero residual is a finding recorded in the report.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from algebra import XPoly

from .branches import RelationBranch, plan_branches
from .models import LHFamily


@dataclass
class RecurrenceCheck:
    """Residuals of both recurrences on one branch or index."""
    branch: RelationBranch
    sr1_residual: XPoly
    sr2_residual: XPoly

    @property
    def passed(self) -> bool:
        return self.sr1_residual.is_zero and self.sr2_residual.is_zero

    def to_dict(self) -> Dict[str, Any]:
        return {
            'branch': self.branch.label,
            'residue': self.branch.residue,
            'index': self.branch.index,
            'sr1_zero': self.sr1_residual.is_zero,
            'sr2_zero': self.sr2_residual.is_zero,
            'sr1_degree': self.sr1_residual.degree,
            'sr2_degree': self.sr2_residual.degree,
        }


@dataclass
class SRReport:
    """Outcome of verify_sr_recurrences for one family."""
    family: str
    checks: List[RecurrenceCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[RecurrenceCheck]:
        return [check for check in self.checks if not check.passed]

    def first_failure(self) -> Optional[RecurrenceCheck]:
        failures = self.failures()
        return failures[0] if failures else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'family': self.family,
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
        }


class RecurrenceVerifier:
    """Symbolic check of the C/D recurrences of a family."""

    def __init__(self, family: LHFamily):
        self.family = family
        self.logger = logging.getLogger(self.__class__.__name__)

    def branches(self) -> List[RelationBranch]:
        f = self.family
        return plan_branches(f.recurrence_requirements(), f.modulus)

    def verify(self) -> SRReport:
        report = SRReport(self.family.name)
        for branch in self.branches():
            check = self._check(branch)
            report.checks.append(check)
            if check.passed:
                self.logger.debug(f"Recurrences hold on {branch.label}")
            else:
                self.logger.error(f"Recurrence residual on {branch.label} of '{self.family.name}': "
                                  f"SR-1 zero={check.sr1_residual.is_zero}, SR-2 zero={check.sr2_residual.is_zero}")
        self.logger.info(f"Recurrence verification of '{self.family.name}': "
                         f"{len(report.checks) - len(report.failures())}/{len(report.checks)} passed")
        return report

    def _values(self, branch: RelationBranch) -> Dict[str, XPoly]:
        f = self.family
        reads = {
            'c_next': (f.c_full, 1), 'c': (f.c_full, 0),
            'd_next': (f.d_full, 1), 'd': (f.d_full, 0), 'd_prev': (f.d_full, -1),
            'g_next': (f.gamma_full, 1), 'g': (f.gamma_full, 0),
            'beta': (f.beta, 0),
        }
        if branch.is_instance:
            return {key: seq.at(branch.index + shift) for key, (seq, shift) in reads.items()}
        return {key: seq.closed_form(branch.residue, shift, branch.modulus)
                for key, (seq, shift) in reads.items()}

    def _check(self, branch: RelationBranch) -> RecurrenceCheck:
        v = self._values(branch)
        t = XPoly.x(self.family.ring) - v['beta']
        sr1 = v['c_next'] + v['c'] - t * v['d'] * 2
        sr2 = (v['g_next'] * v['d_next'] + self.family.phi - v['g'] * v['d_prev']
               + t * v['c'] - t * t * v['d'])
        return RecurrenceCheck(branch, sr1, sr2)


def verify_sr_recurrences(f: LHFamily) -> SRReport:
    """Check both C/D recurrences per branch and at each low index."""
    return RecurrenceVerifier(f).verify()

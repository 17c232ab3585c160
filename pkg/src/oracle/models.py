"""
Oracle Report Models

Models:
- ResidualEntry: Exact residual of one relation, identity or equation at one index
- CDMismatch: An iterated C_n or D_n that differs from the declared closed form
- CDIteration: C_n and D_n produced by the recurrences
- Witnesses: The generated P_n and associated P^(1)_n
- OracleReport: All findings of one verification run
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .qpoly import QPoly


@dataclass(frozen=True)
class ResidualEntry:
    """Residual of `check` at relation index `index`; zero means the check passed."""
    check: str
    index: int
    residual: QPoly
    branch: str = ""

    @property
    def is_zero(self) -> bool:
        return self.residual.is_zero

    def to_dict(self) -> Dict[str, Any]:
        return {
            'relation': self.check,
            'n': self.index,
            'branch': self.branch,
            'residual_is_zero': self.is_zero,
            'residual_degree': self.residual.degree,
        }


@dataclass(frozen=True)
class CDMismatch:
    sequence: str
    index: int
    iterated: QPoly
    declared: QPoly

    def to_dict(self) -> Dict[str, Any]:
        return {
            'sequence': self.sequence,
            'n': self.index,
            'iterated': str(self.iterated),
            'declared': str(self.declared),
        }


@dataclass
class CDIteration:
    """C_0..C_top and D_-1..D_top keyed by index."""
    C: Dict[int, QPoly] = field(default_factory=dict)
    D: Dict[int, QPoly] = field(default_factory=dict)
    mismatches: List[CDMismatch] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.mismatches


@dataclass
class Witnesses:
    P: List[QPoly]
    P1: List[QPoly]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'P': [str(p) for p in self.P],
            'P1': [str(p) for p in self.P1],
        }


@dataclass
class OracleReport:
    """Findings of one family at one numeric context."""
    family: str
    context: Dict[str, Any]
    entries: List[ResidualEntry] = field(default_factory=list)
    mismatches: List[CDMismatch] = field(default_factory=list)
    witnesses: Optional[Witnesses] = None

    @property
    def passed(self) -> bool:
        return not self.mismatches and all(e.is_zero for e in self.entries)

    def failures(self) -> List[ResidualEntry]:
        return [e for e in self.entries if not e.is_zero]

    def first_failure(self) -> Optional[ResidualEntry]:
        failures = self.failures()
        return failures[0] if failures else None

    def extend(self, other: 'OracleReport') -> None:
        self.entries.extend(other.entries)
        self.mismatches.extend(other.mismatches)

    def summary(self) -> str:
        failures = self.failures()
        lines = [f"Oracle verification of '{self.family}': "
                 f"{len(self.entries) - len(failures)}/{len(self.entries)} residuals zero, "
                 f"{len(self.mismatches)} closed-form mismatches"]
        first = self.first_failure()
        if first is not None:
            lines.append(f"  first nonzero residual: {first.check} at n={first.index} "
                         f"(degree {first.residual.degree})")
        if self.mismatches:
            m = self.mismatches[0]
            lines.append(f"  first closed-form mismatch: {m.sequence}_{m.index}")
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'family': self.family,
            'context': self.context,
            'passed': self.passed,
            'residuals': [e.to_dict() for e in self.entries],
            'mismatches': [m.to_dict() for m in self.mismatches],
        }
        if self.witnesses is not None:
            data['witnesses'] = self.witnesses.to_dict()
        return data

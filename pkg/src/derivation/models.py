"""
Derivation Data Models

Models:
- RelationInputs: Phi, B, C, D and the sequence values a branch reads
- StructureRelation: Coefficients of one structure relation of level k
- OdeResult: Coefficients of a linear differential equation in P_{n+1}
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple

from algebra import XPoly
from families import RelationBranch


_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RelationInputs:
    """
    Inputs of the structure relations on one branch.

    On a generic branch the values are closed forms in n; on an instance they
    are the concrete entries at that index.
    """
    branch: RelationBranch
    phi: XPoly
    B0: XPoly
    C0: XPoly
    D0: XPoly
    c_next: XPoly
    d_next: XPoly
    d_n: XPoly
    g_next: XPoly

    @property
    def c_mean(self) -> XPoly:
        """(C_{n+1} + C_0) / 2"""
        return (self.c_next + self.C0).scale(_HALF)

    @property
    def c_gap(self) -> XPoly:
        """(C_{n+1} - C_0) / 2"""
        return (self.c_next - self.C0).scale(_HALF)


@dataclass(frozen=True)
class StructureRelation:
    """
    G0 P^(1)_{n-1} + G1 P^(1)_n + H P_n = phi_power P^(k)_{n+1} + sum_j M[j] P^(j)_{n+1}.
    """
    level: int
    G0: XPoly
    G1: XPoly
    H: XPoly
    M: Tuple[XPoly, ...]
    phi_power: XPoly

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"Relation level must be positive, got {self.level}")
        if len(self.M) != self.level:
            raise ValueError(f"Level {self.level} relation needs {self.level} M coefficients, got {len(self.M)}")

    def m(self, j: int) -> XPoly:
        """M_{j,k}, with M_{k,k} the stored power of Phi."""
        return self.phi_power if j == self.level else self.M[j]

    @property
    def rhs(self) -> Tuple[XPoly, ...]:
        """Coefficients of P^(j)_{n+1}, highest derivative first."""
        return tuple(self.m(j) for j in range(self.level, -1, -1))

    def named_coefficients(self) -> Dict[str, XPoly]:
        k = self.level
        named = {f"G0{k}": self.G0, f"G1{k}": self.G1, f"H{k}": self.H}
        for j in range(k - 1, -1, -1):
            named[f"M{j}{k}"] = self.M[j]
        named[f"Phi^{k}"] = self.phi_power
        return named


ODE_KINDS = (
    'laguerre_hahn',
    'semiclassical_I',
    'semiclassical_II',
    'semiclassical',
    'wronskian',
    'classical',
)


@dataclass(frozen=True)
class OdeResult:
    """
    sum_k coeffs[k] P^(order-k)_{n+1} = 0, coefficients highest derivative first.
    """
    order: int
    coeffs: Tuple[XPoly, ...]
    branch: RelationBranch
    degenerate: bool = False
    kind: str = 'laguerre_hahn'
    family: str = ""

    def __post_init__(self):
        if self.order not in (2, 3, 4):
            raise ValueError(f"ODE order must be 2, 3 or 4, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"Order {self.order} ODE needs {self.order + 1} coefficients, got {len(self.coeffs)}")
        if self.kind not in ODE_KINDS:
            raise ValueError(f"Unknown ODE kind: {self.kind}")
        if self.degenerate and not all(c.is_zero for c in self.coeffs):
            raise ValueError("A degenerate ODE must have all coefficients zero")

    @property
    def all_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    @property
    def ring(self):
        return self.coeffs[0].ring

    @property
    def title(self) -> str:
        return f"{self.kind} order {self.order} on {self.branch.label}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'family': self.family,
            'kind': self.kind,
            'order': self.order,
            'branch': self.branch.to_dict(),
            'degenerate': self.degenerate,
        }

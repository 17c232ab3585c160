"""
Relation Branches

A relation branch is the set of relation indices N = modulus*n + residue on
which every closed form feeding a derivation is valid, together with the
per-index instances below it that must be built by concrete substitution.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .sequences import ParamSeq


@dataclass(frozen=True)
class RelationBranch:
    """
    Branch tag (residue, modulus, min_index), or a concrete index instance.

    On a generic branch the indeterminate n stands for k in N = modulus*k + residue.
    """
    residue: int
    modulus: int
    min_index: int
    index: Optional[int] = None

    def __post_init__(self):
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise ValueError(f"Invalid branch residue {self.residue} mod {self.modulus}")
        if self.index is not None and self.index % self.modulus != self.residue:
            raise ValueError(f"Index {self.index} is not congruent to {self.residue} mod {self.modulus}")

    @property
    def is_instance(self) -> bool:
        return self.index is not None

    @property
    def first_k(self) -> int:
        return (self.min_index - self.residue) // self.modulus

    def matches(self, index: int) -> bool:
        if self.is_instance:
            return index == self.index
        return index >= self.min_index and index % self.modulus == self.residue

    def k_of(self, index: int) -> int:
        """Value of n that selects relation index `index` on this branch."""
        if not self.matches(index):
            raise ValueError(f"Index {index} is not on branch {self.label}")
        return 0 if self.is_instance else (index - self.residue) // self.modulus

    @property
    def label(self) -> str:
        if self.is_instance:
            return f"n={self.index}"
        if self.modulus == 1:
            form = "n"
        else:
            form = f"{self.modulus}n" + (f"+{self.residue}" if self.residue else "")
        return f"{form} (index >= {self.min_index})"

    @property
    def tag(self) -> str:
        """Short identifier usable in file names."""
        if self.is_instance:
            return f"n{self.index}"
        return f"r{self.residue}m{self.modulus}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'residue': self.residue,
            'modulus': self.modulus,
            'min_index': self.min_index,
            'index': self.index,
        }


Requirement = Tuple[ParamSeq, int]


def plan_branches(requirements: Sequence[Requirement], modulus: int,
                  residues: Optional[Iterable[int]] = None) -> List[RelationBranch]:
    """
    Split relation indices into generic branches and low-index instances.

    Args:
        requirements: (sequence, shift) pairs read at index N + shift
        modulus: Family modulus
        residues: Residues to plan; all of 0..modulus-1 by default

    Returns:
        Instances ordered by index, then generic branches ordered by residue
    """
    residues = range(modulus) if residues is None else sorted(set(residues))
    instances, generic = [], []
    for residue in residues:
        if not 0 <= residue < modulus:
            raise ValueError(f"Residue {residue} outside 0..{modulus - 1}")
        k0 = max([0] + [seq.generic_start(residue, shift, modulus) for seq, shift in requirements])
        generic.append(RelationBranch(residue, modulus, modulus * k0 + residue))
        for k in range(k0):
            index = modulus * k + residue
            instances.append(RelationBranch(residue, modulus, index, index=index))
    instances.sort(key=lambda b: b.index)
    return instances + generic

"""
Piecewise Index Sequences

This module provides ParamSeq, a sequence over the integer index given by a
few exceptional entries and one closed-form branch per residue class. The
recurrence coefficients beta and gamma and the structure-relation
coefficients C_n, D_n of a family are all ParamSeq values.

A branch (residue r, modulus m, min_index n0, body) answers every index
i = m*k + r with i >= n0 by substituting n := k in its body. An exceptional
entry overrides the branches at its index.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Optional, Tuple

from algebra import IndeterminateRing, XPoly, ZeroDenominatorError

from .errors import CoverageError, FamilySchemaError, IndexDomainError, OverlapError


logger = logging.getLogger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class SeqBranch:
    """Closed form for the indices modulus*n + residue that are >= min_index."""
    residue: int
    modulus: int
    min_index: int
    body: XPoly

    def __post_init__(self):
        if self.modulus < 1:
            raise FamilySchemaError(f"Branch modulus must be positive, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise FamilySchemaError(
                f"Branch residue {self.residue} outside 0..{self.modulus - 1}")

    def matches(self, index: int) -> bool:
        return index >= self.min_index and (index - self.residue) % self.modulus == 0

    def quotient(self, index: int) -> int:
        return (index - self.residue) // self.modulus

    def value_at(self, index: int) -> XPoly:
        return self.body.at_index(self.quotient(index))

    def transform(self, fn: Callable[[XPoly], XPoly]) -> 'SeqBranch':
        return SeqBranch(self.residue, self.modulus, self.min_index, fn(self.body))


@dataclass(frozen=True)
class ParamSeq:
    """
    Piecewise sequence over the indices start, start+1, ...

    Construction validates coverage: every index of the domain is answered by
    an exceptional entry or by exactly one branch.
    """
    name: str
    start: int
    branches: Tuple[SeqBranch, ...]
    exceptional: Mapping[int, XPoly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'branches', tuple(sorted(self.branches, key=lambda b: b.residue)))
        object.__setattr__(self, 'exceptional', dict(sorted(self.exceptional.items())))
        self.validate()

    # Validation

    def validate(self) -> None:
        """
        Check branch structure and coverage of the domain.

        Raises:
            FamilySchemaError: For mixed moduli or a branch starting below the domain
            OverlapError: If two branches share a residue
            IndexDomainError: For an exceptional entry below the domain
            CoverageError: If some index has no value
        """
        if not self.branches:
            raise CoverageError(f"Sequence '{self.name}' has no branches", self.start)

        moduli = {b.modulus for b in self.branches}
        if len(moduli) != 1:
            raise FamilySchemaError(f"Sequence '{self.name}' mixes branch moduli {sorted(moduli)}")
        modulus = moduli.pop()

        seen = set()
        for branch in self.branches:
            if branch.residue in seen:
                raise OverlapError(
                    f"Sequence '{self.name}' has two branches for residue {branch.residue} mod {modulus}")
            seen.add(branch.residue)
            if branch.min_index < self.start:
                raise FamilySchemaError(
                    f"Sequence '{self.name}': branch min_index {branch.min_index} "
                    f"is below the domain start {self.start}")

        for index in self.exceptional:
            if index < self.start:
                raise IndexDomainError(
                    f"Sequence '{self.name}': exceptional index {index} is below the domain start {self.start}")

        for residue in range(modulus):
            branch = self._branch_by_residue(residue, required=False)
            if branch is None:
                index = self.start + (residue - self.start) % modulus
                while index in self.exceptional:
                    index += modulus
                raise CoverageError(
                    f"Sequence '{self.name}' does not cover index {index} "
                    f"(no branch for residue {residue} mod {modulus})", index)
            for index in range(self.start, branch.min_index):
                if index % modulus == residue and index not in self.exceptional:
                    raise CoverageError(f"Sequence '{self.name}' does not cover index {index}", index)

    # Structure

    @property
    def modulus(self) -> int:
        return self.branches[0].modulus

    @property
    def ring(self) -> IndeterminateRing:
        return self.branches[0].body.ring

    def _branch_by_residue(self, residue: int, required: bool = True) -> Optional[SeqBranch]:
        for branch in self.branches:
            if branch.residue == residue:
                return branch
        if required:
            raise CoverageError(f"Sequence '{self.name}' has no branch for residue {residue}")
        return None

    def branch_for(self, index: int) -> SeqBranch:
        return self._branch_by_residue(index % self.modulus)

    # Access

    def at(self, index: int) -> XPoly:
        """
        Value at a concrete index.

        Raises:
            IndexDomainError: If index lies below the domain
        """
        if index < self.start:
            raise IndexDomainError(f"Index {index} is outside the domain of '{self.name}' (starts at {self.start})")
        if index in self.exceptional:
            return self.exceptional[index]
        branch = self.branch_for(index)
        if not branch.matches(index):
            raise CoverageError(f"Sequence '{self.name}' does not cover index {index}", index)
        return branch.value_at(index)

    def closed_form(self, residue: int, shift: int = 0, modulus: Optional[int] = None) -> XPoly:
        """
        Closed form of the entry at index modulus*n + residue + shift, as an XPoly in n.

        `modulus` defaults to the sequence's own and must be a multiple of it.
        Exceptional entries are not consulted; see generic_start.
        """
        modulus = modulus or self.modulus
        if modulus % self.modulus:
            raise FamilySchemaError(
                f"Modulus {modulus} is not a multiple of the modulus {self.modulus} of '{self.name}'")
        target = residue + shift
        branch = self._branch_by_residue(target % self.modulus)
        offset = (target - branch.residue) // self.modulus
        return branch.body.subs_index(modulus // self.modulus, offset)

    def generic_start(self, residue: int, shift: int = 0, modulus: Optional[int] = None) -> int:
        """
        Smallest k0 such that closed_form(residue, shift, modulus) at n := k
        equals the sequence at index modulus*k + residue + shift for all k >= k0.
        """
        modulus = modulus or self.modulus
        target = residue + shift
        branch = self._branch_by_residue(target % self.modulus)

        k0 = _ceil_div(branch.min_index - target, modulus)
        for index, value in self.exceptional.items():
            if (index - target) % modulus == 0 and index >= modulus * k0 + target \
                    and not self._agrees(branch, index, value):
                k0 = (index - target) // modulus + 1

        # Entries just below the branch may coincide with its closed form.
        while True:
            index = modulus * (k0 - 1) + target
            if index < self.start or index not in self.exceptional \
                    or not self._agrees(branch, index, self.exceptional[index]):
                return k0
            k0 -= 1

    @staticmethod
    def _agrees(branch: SeqBranch, index: int, value: XPoly) -> bool:
        try:
            return branch.value_at(index) == value
        except ZeroDenominatorError:
            return False

    # Derived sequences

    def transform(self, fn: Callable[[XPoly], XPoly], name: Optional[str] = None) -> 'ParamSeq':
        """Apply fn to every body and exceptional entry."""
        return ParamSeq(
            name=name or self.name,
            start=self.start,
            branches=tuple(b.transform(fn) for b in self.branches),
            exceptional={i: fn(v) for i, v in self.exceptional.items()},
        )

    def evaluate(self, assignment: Mapping[str, object]) -> 'ParamSeq':
        return self.transform(lambda p: p.evaluate(assignment))

    def extended(self, start: int, entries: Mapping[int, XPoly], name: Optional[str] = None) -> 'ParamSeq':
        """Same branches with extra exceptional entries and an earlier domain start."""
        merged: Dict[int, XPoly] = dict(self.exceptional)
        merged.update(entries)
        return ParamSeq(name or self.name, min(start, self.start), self.branches, merged)

    def with_entries(self, entries: Mapping[int, XPoly]) -> 'ParamSeq':
        """Override some indices by exceptional entries."""
        return self.extended(self.start, entries)

    def shifted(self, r: int) -> 'ParamSeq':
        """
        Index-shifted sequence s'_i = s_{i+r} on the same domain start.

        Raises:
            ValueError: If r is negative
        """
        if r < 0:
            raise ValueError(f"Shift must be nonnegative, got {r}")
        if r == 0:
            return self
        exceptional = {i - r: v for i, v in self.exceptional.items() if i - r >= self.start}
        branches = []
        for branch in self.branches:
            m = branch.modulus
            residue = (branch.residue - r) % m
            offset = (residue - branch.residue + r) // m
            branches.append(SeqBranch(
                residue=residue,
                modulus=m,
                min_index=max(branch.min_index - r, self.start),
                body=branch.body.shift_index(offset),
            ))
        logger.debug(f"Shifted sequence '{self.name}' by {r}")
        return ParamSeq(self.name, self.start, tuple(branches), exceptional)

    def __repr__(self) -> str:
        return (f"ParamSeq({self.name!r}, start={self.start}, modulus={self.modulus}, "
                f"exceptional={sorted(self.exceptional)}, branches={len(self.branches)})")


def seq_at(seq: ParamSeq, idx: int) -> XPoly:
    """Entry of `seq` at a concrete index."""
    return seq.at(idx)


def seq_branch(seq: ParamSeq, residue: int, shift: int = 0) -> XPoly:
    """Closed form of the entry at index m*n + residue + shift, m the sequence modulus."""
    return seq.closed_form(residue, shift)

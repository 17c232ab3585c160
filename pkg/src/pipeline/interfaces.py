"""
Pipeline Interfaces and Contracts

This module defines the execution strategies and the branch processor
contract used to run derivations over the branches of a family.
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import List, Protocol

from derivation import BranchDerivation, BranchDeriver
from families import RelationBranch


class ExecutionStrategy(Enum):
    """How independent branch derivations are executed."""
    SEQUENTIAL = "sequential"
    PARALLEL = "parallel"
    ADAPTIVE = "adaptive"


class ProcessingSettings(Protocol):
    """Settings a branch processor reads."""
    max_workers: int
    parallel_threshold: int


class BranchProcessor(ABC):
    """Abstract interface for branch processing strategies."""

    def __init__(self, deriver: BranchDeriver):
        self.deriver = deriver

    @abstractmethod
    def process_branches(self, branches: List[RelationBranch],
                         settings: ProcessingSettings) -> List[BranchDerivation]:
        """
        Derive every branch according to the strategy.

        Args:
            branches: Branches from the family's branch plan
            settings: Worker settings

        Returns:
            Derivations in the order of `branches`
        """
        pass

    @abstractmethod
    def get_strategy_name(self) -> str:
        """Get the name of this processing strategy."""
        pass

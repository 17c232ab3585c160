"""
Processing Strategies

Sequential, parallel and adaptive execution of branch derivations. Parallel
results are re-sorted into branch-plan order so artifacts do not depend on
completion order.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Dict, List, Optional

from derivation import BranchDerivation, BranchDeriver
from families import RelationBranch

from .interfaces import BranchProcessor, ExecutionStrategy, ProcessingSettings


class SequentialBranchProcessor(BranchProcessor):
    """Sequential branch processing strategy."""

    def __init__(self, deriver: BranchDeriver, monitor: Optional['PerformanceMonitor'] = None):
        super().__init__(deriver)
        self.monitor = monitor
        self.logger = logging.getLogger(self.__class__.__name__)

    def process_branches(self, branches: List[RelationBranch],
                         settings: ProcessingSettings) -> List[BranchDerivation]:
        self.logger.info(f"Deriving {len(branches)} branches sequentially")
        results = []
        for i, branch in enumerate(branches, 1):
            self.logger.debug(f"Deriving branch {i}/{len(branches)}: {branch.label}")
            results.append(_timed(self.deriver, branch, self.monitor))
        return results

    def get_strategy_name(self) -> str:
        return "sequential"


class ParallelBranchProcessor(BranchProcessor):
    """Parallel branch processing strategy on a thread pool."""

    def __init__(self, deriver: BranchDeriver, monitor: Optional['PerformanceMonitor'] = None):
        super().__init__(deriver)
        self.monitor = monitor
        self.logger = logging.getLogger(self.__class__.__name__)

    def process_branches(self, branches: List[RelationBranch],
                         settings: ProcessingSettings) -> List[BranchDerivation]:
        if not branches:
            return []
        max_workers = min(settings.max_workers, len(branches))
        self.logger.info(f"Deriving {len(branches)} branches in parallel with {max_workers} workers")

        results: Dict[RelationBranch, BranchDerivation] = {}
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            future_to_branch = {
                executor.submit(_timed, self.deriver, branch, self.monitor): branch
                for branch in branches
            }
            for completed, future in enumerate(as_completed(future_to_branch), 1):
                branch = future_to_branch[future]
                try:
                    results[branch] = future.result()
                except Exception as e:
                    self.logger.error(f"Derivation of {branch.label} failed: {e}")
                    raise
                self.logger.debug(f"Completed branch ({completed}/{len(branches)}): {branch.label}")

        return [results[branch] for branch in branches]

    def get_strategy_name(self) -> str:
        return "parallel"


class AdaptiveBranchProcessor(BranchProcessor):
    """Chooses sequential or parallel execution from the branch count."""

    def __init__(self, deriver: BranchDeriver, monitor: Optional['PerformanceMonitor'] = None):
        super().__init__(deriver)
        self.sequential_processor = SequentialBranchProcessor(deriver, monitor)
        self.parallel_processor = ParallelBranchProcessor(deriver, monitor)
        self.logger = logging.getLogger(self.__class__.__name__)

    def process_branches(self, branches: List[RelationBranch],
                         settings: ProcessingSettings) -> List[BranchDerivation]:
        count = len(branches)
        if count >= settings.parallel_threshold and settings.max_workers > 1:
            self.logger.info(f"Adaptive strategy: parallel ({count} branches >= {settings.parallel_threshold})")
            return self.parallel_processor.process_branches(branches, settings)
        self.logger.info(f"Adaptive strategy: sequential ({count} branches < {settings.parallel_threshold})")
        return self.sequential_processor.process_branches(branches, settings)

    def get_strategy_name(self) -> str:
        return "adaptive"


def _timed(deriver: BranchDeriver, branch: RelationBranch,
           monitor: Optional['PerformanceMonitor']) -> BranchDerivation:
    start = time.time()
    try:
        return deriver.derive(branch)
    except Exception as e:
        if monitor is not None:
            monitor.record_error(branch.label, str(e))
        raise
    finally:
        if monitor is not None:
            monitor.record_branch_time(branch.label, time.time() - start)


class ProcessingStrategyFactory:
    """Factory for creating processing strategies."""

    @staticmethod
    def create_processor(strategy: ExecutionStrategy, deriver: BranchDeriver,
                         monitor: Optional['PerformanceMonitor'] = None) -> BranchProcessor:
        if strategy == ExecutionStrategy.SEQUENTIAL:
            return SequentialBranchProcessor(deriver, monitor)
        elif strategy == ExecutionStrategy.PARALLEL:
            return ParallelBranchProcessor(deriver, monitor)
        elif strategy == ExecutionStrategy.ADAPTIVE:
            return AdaptiveBranchProcessor(deriver, monitor)
        else:
            raise ValueError(f"Unknown processing strategy: {strategy}")


class PerformanceMonitor:
    """Wall-clock timing of a run and its branch derivations."""

    def __init__(self):
        self.start_time = None
        self.end_time = None
        self.branch_times: Dict[str, float] = {}
        self.errors: List[Dict[str, str]] = []
        self.logger = logging.getLogger(self.__class__.__name__)

    def start_monitoring(self):
        self.start_time = time.time()
        self.logger.debug("Performance monitoring started")

    def end_monitoring(self):
        self.end_time = time.time()
        self.logger.debug("Performance monitoring ended")

    def record_branch_time(self, branch: str, duration: float):
        self.branch_times[branch] = duration

    def record_error(self, branch: str, error: str):
        self.errors.append({'branch': branch, 'error': error})

    def get_performance_report(self) -> Dict[str, Any]:
        if not self.start_time or not self.end_time:
            return {'error': 'Monitoring not completed'}

        total_duration = self.end_time - self.start_time
        times = self.branch_times
        return {
            'total_duration_seconds': round(total_duration, 2),
            'branches_derived': len(times),
            'average_branch_time_seconds': round(sum(times.values()) / len(times), 2) if times else 0,
            'slowest_branch': max(times.items(), key=lambda x: x[1]) if times else None,
            'error_count': len(self.errors),
            'errors': self.errors,
        }

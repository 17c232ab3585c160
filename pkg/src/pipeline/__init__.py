"""
Pipeline Package

Runs the derivation pipeline end to end from family files: derive the
structure relations and equations, reduce them, verify them with the
exact oracle and emit the results.

## Usage

```python
from pipeline import CommonConfigs, run_pipeline

config = CommonConfigs.full_run("hermite_case1", output_path="out")
result = run_pipeline(config)
result.exit_code        # 0 when every residual vanishes
```

From the shell:

```bash
PYTHONPATH=src python -m pipeline verify --family semiclassical_class1 --n-max 8
```
"""

from .errors import PipelineError, ConfigurationError
from .interfaces import BranchProcessor, ExecutionStrategy
from .config import COMMANDS, CommonConfigs, ConfigBuilder, RunConfig
from .processing import (
    AdaptiveBranchProcessor,
    ParallelBranchProcessor,
    PerformanceMonitor,
    ProcessingStrategyFactory,
    SequentialBranchProcessor,
)
from .goldens import GoldenCheck, GoldenEquation, compare_golden, cross_products_agree, goldens_from_document
from .runner import (
    EXIT_CONFIGURATION_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    PipelineRunner,
    RunResult,
    run_pipeline,
)
from .cli import main

__all__ = [
    # Errors
    'PipelineError',
    'ConfigurationError',

    # Configuration
    'RunConfig',
    'ConfigBuilder',
    'CommonConfigs',
    'COMMANDS',
    'ExecutionStrategy',

    # Processing
    'BranchProcessor',
    'SequentialBranchProcessor',
    'ParallelBranchProcessor',
    'AdaptiveBranchProcessor',
    'ProcessingStrategyFactory',
    'PerformanceMonitor',

    # Goldens
    'GoldenEquation',
    'GoldenCheck',
    'cross_products_agree',
    'compare_golden',
    'goldens_from_document',

    # Running
    'PipelineRunner',
    'RunResult',
    'run_pipeline',
    'main',
    'EXIT_OK',
    'EXIT_VERIFICATION_FAILED',
    'EXIT_CONFIGURATION_ERROR',
]

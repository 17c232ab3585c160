"""
Run Configuration Management

This module provides the configuration of one pipeline run: which family,
which command, which branches, the numeric context for verification, the
output format and location, and how branch derivations are executed.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

from algebra import as_rational
from families.loader import DEFAULT_FAMILY_DIR
from oracle import DEFAULT_N_MAX
from reduction import FORMATS

from .errors import ConfigurationError
from .interfaces import ExecutionStrategy


COMMANDS = ('derive', 'reduce', 'verify', 'class', 'emit', 'all')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@dataclass
class RunConfig:
    """
    Configuration of one pipeline run.

    Assignment and specialization values are kept as rational strings ("p/q")
    so the configuration serializes to JSON unchanged.
    """

    # What to run
    family: str
    command: str = 'all'
    branch: str = 'all'
    family_dir: str = DEFAULT_FAMILY_DIR

    # Numeric verification
    n_max: int = DEFAULT_N_MAX
    assignments: Dict[str, str] = field(default_factory=dict)
    specialize: Dict[str, str] = field(default_factory=dict)
    include_witnesses: bool = False

    # Output
    output_format: str = 'text'
    output_path: Optional[str] = None

    # Execution
    strategy: ExecutionStrategy = ExecutionStrategy.ADAPTIVE
    max_workers: int = 4
    parallel_threshold: int = 2

    # Logging
    log_level: str = "INFO"
    profile_performance: bool = False

    def __post_init__(self):
        self._validate_config()

    def _validate_config(self) -> None:
        if not self.family:
            raise ConfigurationError("family is required")

        if self.command not in COMMANDS:
            raise ConfigurationError(f"Invalid command: {self.command}; expected one of {list(COMMANDS)}")

        if self.branch != 'all':
            try:
                residue = int(self.branch)
            except ValueError:
                raise ConfigurationError(f"Invalid branch selector: {self.branch!r}") from None
            if residue < 0:
                raise ConfigurationError(f"Branch residue must be nonnegative, got {residue}")

        if self.n_max < 0:
            raise ConfigurationError("n_max must be non-negative")

        for label, values in (('assignment', self.assignments), ('specialization', self.specialize)):
            for name, value in values.items():
                try:
                    as_rational(value)
                except ValueError:
                    raise ConfigurationError(f"Invalid {label} {name}={value!r}: not a rational") from None

        if self.output_format not in FORMATS:
            raise ConfigurationError(f"Invalid output_format: {self.output_format}")

        if self.max_workers < 1:
            raise ConfigurationError("max_workers must be at least 1")

        if self.parallel_threshold < 1:
            raise ConfigurationError("parallel_threshold must be at least 1")

        if self.log_level not in LOG_LEVELS:
            raise ConfigurationError(f"Invalid log_level: {self.log_level}")

    # Parsed views

    def residues(self) -> Optional[List[int]]:
        """Selected branch residues; None selects every branch."""
        return None if self.branch == 'all' else [int(self.branch)]

    def parsed_assignments(self) -> Dict[str, Fraction]:
        return {name: as_rational(value) for name, value in self.assignments.items()}

    def parsed_specialization(self) -> Dict[str, Fraction]:
        return {name: as_rational(value) for name, value in self.specialize.items()}

    # Serialization

    def to_dict(self) -> Dict[str, Any]:
        return {
            'family': self.family,
            'command': self.command,
            'branch': self.branch,
            'family_dir': self.family_dir,
            'n_max': self.n_max,
            'assignments': dict(self.assignments),
            'specialize': dict(self.specialize),
            'include_witnesses': self.include_witnesses,
            'output_format': self.output_format,
            'output_path': self.output_path,
            'strategy': self.strategy.value,
            'max_workers': self.max_workers,
            'parallel_threshold': self.parallel_threshold,
            'log_level': self.log_level,
            'profile_performance': self.profile_performance,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunConfig':
        data = dict(data)
        if 'strategy' in data and isinstance(data['strategy'], str):
            try:
                data['strategy'] = ExecutionStrategy(data['strategy'])
            except ValueError:
                raise ConfigurationError(f"Invalid strategy: {data['strategy']}") from None
        for key in ('assignments', 'specialize'):
            if key in data:
                data[key] = {name: str(value) for name, value in data[key].items()}
        try:
            return cls(**data)
        except TypeError as e:
            raise ConfigurationError(f"Invalid run configuration: {e}") from e

    @classmethod
    def from_file(cls, file_path: str) -> 'RunConfig':
        """Load configuration from a JSON file."""
        with open(file_path, 'r', encoding='utf-8') as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as e:
                raise ConfigurationError(f"Invalid JSON in run configuration {file_path}: {e}") from e
        return cls.from_dict(data)

    def save_to_file(self, file_path: str) -> None:
        Path(file_path).parent.mkdir(parents=True, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(), f, indent=2, ensure_ascii=False)

    def copy(self, **changes) -> 'RunConfig':
        """Create a copy of the configuration with optional changes."""
        current = self.to_dict()
        current.update(changes)
        return self.from_dict(current)


class ConfigBuilder:
    """Builder pattern for creating run configurations."""

    def __init__(self, family: str):
        self._config_dict: Dict[str, Any] = {'family': family}

    def with_command(self, command: str) -> 'ConfigBuilder':
        self._config_dict['command'] = command
        return self

    def with_branch(self, branch: str) -> 'ConfigBuilder':
        self._config_dict['branch'] = str(branch)
        return self

    def with_family_dir(self, family_dir: str) -> 'ConfigBuilder':
        self._config_dict['family_dir'] = family_dir
        return self

    def with_verification(self, n_max: int = DEFAULT_N_MAX, assignments: Optional[Dict[str, Any]] = None,
                          include_witnesses: bool = False) -> 'ConfigBuilder':
        self._config_dict.update({
            'n_max': n_max,
            'assignments': {k: str(v) for k, v in (assignments or {}).items()},
            'include_witnesses': include_witnesses,
        })
        return self

    def with_specialization(self, values: Dict[str, Any]) -> 'ConfigBuilder':
        self._config_dict['specialize'] = {k: str(v) for k, v in values.items()}
        return self

    def with_output(self, output_format: str = 'text', output_path: Optional[str] = None) -> 'ConfigBuilder':
        self._config_dict.update({
            'output_format': output_format,
            'output_path': output_path,
        })
        return self

    def with_strategy(self, strategy: ExecutionStrategy) -> 'ConfigBuilder':
        self._config_dict['strategy'] = strategy
        return self

    def with_parallel_processing(self, max_workers: int = 4, threshold: int = 2) -> 'ConfigBuilder':
        self._config_dict.update({
            'max_workers': max_workers,
            'parallel_threshold': threshold,
        })
        return self

    def with_debugging(self, log_level: str = "DEBUG", profile_performance: bool = True) -> 'ConfigBuilder':
        self._config_dict.update({
            'log_level': log_level,
            'profile_performance': profile_performance,
        })
        return self

    def build(self) -> RunConfig:
        return RunConfig.from_dict(self._config_dict)


class CommonConfigs:
    """Common run configurations."""

    @staticmethod
    def quick_check(family: str) -> RunConfig:
        """Fast verification over a short index range."""
        return ConfigBuilder(family) \
            .with_command('verify') \
            .with_verification(n_max=4) \
            .with_strategy(ExecutionStrategy.SEQUENTIAL) \
            .build()

    @staticmethod
    def full_run(family: str, output_path: str, output_format: str = 'text') -> RunConfig:
        """Every command, with witnesses in the verification report."""
        return ConfigBuilder(family) \
            .with_command('all') \
            .with_verification(include_witnesses=True) \
            .with_output(output_format, output_path) \
            .with_strategy(ExecutionStrategy.ADAPTIVE) \
            .with_parallel_processing(max_workers=4, threshold=2) \
            .build()

    @staticmethod
    def ci(family: str) -> RunConfig:
        """Verification with quiet logging for automated checks."""
        return ConfigBuilder(family) \
            .with_command('verify') \
            .with_verification() \
            .with_strategy(ExecutionStrategy.SEQUENTIAL) \
            .with_debugging(log_level="WARNING", profile_performance=False) \
            .build()

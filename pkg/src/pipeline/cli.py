"""
Command-Line Interface

    python -m pipeline <command> --family NAME|FILE [--branch all|R] [--n-max N]
                       [--assign name=p/q ...] [--specialize name=p/q ...]
                       [--format text|latex] [--out DIR] [--config FILE]

Exit status: 0 on success, 1 when verification finds a nonzero residual or
a closed-form mismatch, 2 on configuration, parse or family errors.
"""

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional, Sequence

from derivation import DerivationError
from expressions import ExpressionError
from families import FamilyError
from reduction import ReductionError

from .config import COMMANDS, LOG_LEVELS, RunConfig
from .errors import ConfigurationError
from .interfaces import ExecutionStrategy
from .runner import EXIT_CONFIGURATION_ERROR, EXIT_VERIFICATION_FAILED, run_pipeline


logger = logging.getLogger(__name__)


def _pairs(items: Optional[List[str]], flag: str) -> Dict[str, str]:
    values = {}
    for item in items or []:
        name, sep, value = item.partition('=')
        if not sep or not name.strip() or not value.strip():
            raise ConfigurationError(f"{flag} expects name=p/q, got {item!r}")
        values[name.strip()] = value.strip()
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='lhode',
        description="Structure relations and differential equations of Laguerre-Hahn orthogonal polynomials")
    parser.add_argument('command', choices=COMMANDS, help="Pipeline stage to run")
    parser.add_argument('--family', help="Bundled family name or path to a family JSON file")
    parser.add_argument('--config', help="Run configuration JSON; command-line flags override it")
    parser.add_argument('--family-dir', help="Directory of bundled family files")
    parser.add_argument('--branch', help="'all' or a residue")
    parser.add_argument('--n-max', type=int, help="Largest index checked by the oracle")
    parser.add_argument('--assign', action='append', metavar='NAME=P/Q',
                        help="Numeric parameter value for verification (repeatable)")
    parser.add_argument('--specialize', action='append', metavar='NAME=P/Q',
                        help="Substitute a parameter before deriving (repeatable)")
    parser.add_argument('--format', dest='output_format', choices=('text', 'latex'), help="Output format")
    parser.add_argument('--out', dest='output_path', help="Artifact directory; stdout when omitted")
    parser.add_argument('--strategy', choices=[s.value for s in ExecutionStrategy],
                        help="Branch execution strategy")
    parser.add_argument('--workers', dest='max_workers', type=int, help="Worker threads for parallel derivation")
    parser.add_argument('--witnesses', dest='include_witnesses', action='store_true', default=None,
                        help="Include P_n and P^(1)_n in the verification report")
    parser.add_argument('--log-level', choices=LOG_LEVELS, help="Logging level (logs go to stderr)")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Merge an optional configuration file with command-line flags.

    Raises:
        ConfigurationError: If the result is invalid or no family is named
    """
    data = RunConfig.from_file(args.config).to_dict() if args.config else {}
    data['command'] = args.command
    for key in ('family', 'family_dir', 'branch', 'n_max', 'output_format', 'output_path',
                'max_workers', 'include_witnesses', 'log_level', 'strategy'):
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    if args.assign:
        data['assignments'] = {**data.get('assignments', {}), **_pairs(args.assign, '--assign')}
    if args.specialize:
        data['specialize'] = {**data.get('specialize', {}), **_pairs(args.specialize, '--specialize')}
    if not data.get('family'):
        raise ConfigurationError("--family is required")
    return RunConfig.from_dict(data)


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        configure_logging(config.log_level)
        result = run_pipeline(config)
    except (ConfigurationError, FamilyError, ExpressionError, FileNotFoundError, json.JSONDecodeError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIGURATION_ERROR
    except (DerivationError, ReductionError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    for path in result.artifacts:
        logger.info(f"Wrote {path}")
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())

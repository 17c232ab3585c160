"""
Pipeline Runner

Runs the commands of one configured pipeline run over a family:

- derive: structure relations, the fourth-order equation (or its degeneracy
  notice) and the semiclassical and classical reductions, one artifact per branch
- reduce: common factor and reduced coefficients of every derived equation
- verify: symbolic C/D recurrence check, then the exact numeric oracle
- class: degrees of Phi, psi and B and the class s
- emit: every reduced equation in one artifact
- all: derive, reduce, verify and emit in turn
"""

import json
import logging
import sys
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO, Tuple

from derivation import BranchDerivation, BranchDeriver
from families import FamilyLoader, LHFamily, RelationBranch, class_degrees, specialize_family, verify_sr_recurrences
from oracle import NumericContext, OracleError, OracleReport, OracleVerifier
from oracle.checks import equation_label
from reduction import DegenerateOdeError, ReducedOde, emit, format_coefficient, reduce_ode

from .config import RunConfig
from .errors import ConfigurationError
from .goldens import GoldenCheck, compare_golden, find_equation, goldens_from_document
from .processing import PerformanceMonitor, ProcessingStrategyFactory


EXTENSIONS = {'text': 'txt', 'latex': 'tex'}
COMMENTS = {'text': '#', 'latex': '%'}

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_CONFIGURATION_ERROR = 2


class ArtifactWriter:
    """Writes named artifacts to the output directory, or to a stream without one."""

    def __init__(self, output_path: Optional[str], stream: TextIO):
        self.output_dir = Path(output_path) if output_path else None
        self.stream = stream
        self.artifacts: List[Path] = []
        self._lock = threading.Lock()
        self.logger = logging.getLogger(self.__class__.__name__)

    def write(self, name: str, content: str) -> None:
        with self._lock:
            if self.output_dir is None:
                self.stream.write(content)
                return
            self.output_dir.mkdir(parents=True, exist_ok=True)
            path = self.output_dir / name
            path.write_text(content, encoding='utf-8')
            self.artifacts.append(path)
            self.logger.debug(f"Artifact written: {path}")

    def echo(self, text: str) -> None:
        with self._lock:
            self.stream.write(text if text.endswith("\n") else text + "\n")


@dataclass
class RunResult:
    """Outcome of a pipeline run."""
    command: str
    exit_code: int = EXIT_OK
    artifacts: List[Path] = field(default_factory=list)
    verification: Optional[Dict[str, Any]] = None
    class_report: Optional[Dict[str, Any]] = None

    @property
    def succeeded(self) -> bool:
        return self.exit_code == EXIT_OK


class PipelineRunner:
    """
    Orchestrates derivation, reduction, verification and emission for one family.
    """

    def __init__(self, config: RunConfig, stream: Optional[TextIO] = None):
        self.config = config
        self.logger = logging.getLogger(self.__class__.__name__)
        self.loader = FamilyLoader(config.family_dir)
        self.monitor = PerformanceMonitor()
        self.writer = ArtifactWriter(config.output_path, stream or sys.stdout)
        self._family: Optional[LHFamily] = None
        self._derivations: Optional[List[BranchDerivation]] = None
        self._reduced: Optional[Dict[RelationBranch, List[ReducedOde]]] = None

    # Shared stages

    @property
    def fmt(self) -> str:
        return self.config.output_format

    @property
    def family(self) -> LHFamily:
        if self._family is None:
            family = self.loader.load_family(self.config.family)
            if self.config.specialize:
                family = specialize_family(family, self.config.parsed_specialization())
            if family.stale_sequences:
                self.logger.warning(f"C_n, D_n of '{family.name}' are stale after a change of variable")
            self._family = family
        return self._family

    @property
    def stem(self) -> str:
        return Path(self.config.family).stem

    def derivations(self) -> List[BranchDerivation]:
        if self._derivations is None:
            f = self.family
            residues = self.config.residues()
            if residues and any(r >= f.modulus for r in residues):
                raise ConfigurationError(
                    f"Branch residue {residues[0]} is out of range for modulus {f.modulus} of '{f.name}'")
            deriver = BranchDeriver(f)
            processor = ProcessingStrategyFactory.create_processor(self.config.strategy, deriver, self.monitor)
            self._derivations = processor.process_branches(deriver.branches(residues), self.config)
            self.logger.info(f"Derived {len(self._derivations)} branches of '{f.name}' "
                             f"with the {processor.get_strategy_name()} strategy")
        return self._derivations

    def reduced(self) -> Dict[RelationBranch, List[ReducedOde]]:
        """Reduced equations per branch, in branch-plan order."""
        if self._reduced is None:
            self._reduced = {}
            for d in self.derivations():
                items = []
                for ode in d.equations:
                    try:
                        items.append(reduce_ode(ode))
                    except DegenerateOdeError as e:
                        self.logger.info(f"{d.branch.label}: {e}")
                self._reduced[d.branch] = items
            self.logger.info(f"Reduced {sum(len(v) for v in self._reduced.values())} equations")
        return self._reduced

    def context(self) -> NumericContext:
        try:
            return NumericContext.for_family(self.family, self.config.parsed_assignments(), self.config.n_max)
        except OracleError as e:
            raise ConfigurationError(f"Numeric context for '{self.family.name}': {e}") from e

    # Commands

    def run(self) -> RunResult:
        """Run the configured command."""
        command = self.config.command
        self.monitor.start_monitoring()
        result = RunResult(command)

        if command in ('derive', 'all'):
            self.cmd_derive()
        if command in ('reduce', 'all'):
            self.cmd_reduce()
        if command in ('verify', 'all'):
            passed, result.verification = self.cmd_verify()
            if not passed:
                result.exit_code = EXIT_VERIFICATION_FAILED
        if command in ('emit', 'all'):
            self.cmd_emit()
        if command == 'class':
            result.class_report = self.cmd_class()

        self.monitor.end_monitoring()
        if self.config.profile_performance:
            self.logger.info(f"Performance: {self.monitor.get_performance_report()}")
        result.artifacts = list(self.writer.artifacts)
        return result

    def cmd_derive(self) -> None:
        for d in self.derivations():
            self.writer.write(f"{self.stem}_{d.branch.tag}_derive.{EXTENSIONS[self.fmt]}",
                              self._derive_artifact(d))

    def cmd_reduce(self) -> None:
        c = COMMENTS[self.fmt]
        reduced = self.reduced()
        for d in self.derivations():
            lines = self._header(d)
            if d.ode4.degenerate:
                lines.append(f"{c} fourth-order equation is degenerate; reductions follow")
            for r in reduced[d.branch]:
                lines.append(f"{c} {r.ode.kind} order {r.order}")
                lines.append(f"{c} common factor: {emit(r.common, self.fmt)}")
                lines.append(emit(r, self.fmt))
            self.writer.write(f"{self.stem}_{d.branch.tag}_reduce.{EXTENSIONS[self.fmt]}", "\n".join(lines) + "\n")

    def cmd_emit(self) -> None:
        c = COMMENTS[self.fmt]
        lines = [f"{c} family: {self.family.name}"]
        reduced = self.reduced()
        for d in self.derivations():
            for r in reduced[d.branch]:
                lines.append(f"{c} {d.branch.label}: {r.ode.kind} order {r.order}")
                lines.append(emit(r, self.fmt))
        self.writer.write(f"{self.stem}_equations.{EXTENSIONS[self.fmt]}", "\n".join(lines) + "\n")

    def cmd_verify(self) -> Tuple[bool, Dict[str, Any]]:
        """
        Symbolic recurrence check followed by the numeric oracle.

        Returns:
            (passed, report) where report is the JSON verification report
        """
        f = self.family
        ctx = self.context()
        sr_report = verify_sr_recurrences(f)

        derivations = self.derivations()
        reduced = self.reduced()
        equations = [ode for d in derivations for ode in d.equations] + \
                    [r for items in reduced.values() for r in items]
        equations = [ode for ode in equations if self._has_index(ode, ctx)]

        verifier = OracleVerifier(f, ctx)
        oracle_report = verifier.verify(equations, relations={d.branch: d.relations for d in derivations},
                                        include_witnesses=self.config.include_witnesses)
        goldens = self._check_goldens(equations, oracle_report)

        passed = sr_report.passed and oracle_report.passed
        report = {
            'family': f.name,
            'config': self.config.to_dict(),
            'passed': passed,
            'recurrences': sr_report.to_dict(),
            'oracle': oracle_report.to_dict(),
            'goldens': [g.to_dict() for g in goldens],
        }

        self.writer.echo(oracle_report.summary())
        failure = sr_report.first_failure()
        if failure is not None:
            self.writer.echo(f"  recurrence residual on {failure.branch.label}")
        self.writer.echo(f"Verification {'passed' if passed else 'FAILED'}")
        if self.writer.output_dir is not None:
            self.writer.write(f"{self.stem}_verification.json", json.dumps(report, indent=2) + "\n")

        log = self.logger.info if passed else self.logger.error
        log(f"Verification of '{f.name}' {'passed' if passed else 'failed'}")
        return passed, report

    def cmd_class(self) -> Dict[str, Any]:
        f = self.family
        report = {'family': f.name, **class_degrees(f).to_dict()}
        self.writer.echo(f"family: {f.name}")
        self.writer.echo(f"deg Phi = {_deg(report['deg_phi'])}, deg psi = {_deg(report['deg_psi'])}, "
                         f"deg B = {_deg(report['deg_B'])}")
        self.writer.echo(f"class s = {report['s']}")
        if report['semiclassical']:
            self.writer.echo("B = 0: semiclassical")
        if self.writer.output_dir is not None:
            self.writer.write(f"{self.stem}_class.json", json.dumps(report, indent=2) + "\n")
        return report

    # Helpers

    def _header(self, d: BranchDerivation) -> List[str]:
        c = COMMENTS[self.fmt]
        return [f"{c} family: {self.family.name}", f"{c} branch: {d.branch.label}"]

    def _derive_artifact(self, d: BranchDerivation) -> str:
        c = COMMENTS[self.fmt]
        lines = self._header(d)
        for rel in d.relations:
            lines.append(f"{c} structure relation, level {rel.level}")
            lines.append(emit(rel, self.fmt))
        lines.append(f"{c} fourth-order Laguerre-Hahn equation")
        if d.ode4.degenerate:
            lines.append(f"{c} degenerate: all five coefficients vanish identically (B = 0)")
        else:
            for name, coeff in zip("ABCDE", d.ode4.coeffs):
                lines.append(f"{name} = {format_coefficient(coeff, self.fmt)}")
        for note in d.notes:
            lines.append(f"{c} note: {note}")
        for ode in d.reductions:
            lines.append(f"{c} {ode.kind} order {ode.order}")
            lines.append(emit(ode, self.fmt))
        if d.sum_D is not None:
            lines.append(f"{c} sum of D_nu for nu = 0..n")
            lines.append(format_coefficient(d.sum_D, self.fmt))
        return "\n".join(lines) + "\n"

    def _has_index(self, ode, ctx: NumericContext) -> bool:
        branch = ode.branch
        if any(branch.matches(n) for n in range(ctx.n_max + 1)):
            return True
        self.logger.debug(f"Skipping {equation_label(ode)} on {branch.label}: no index up to {ctx.n_max}")
        return False

    def _check_goldens(self, equations: List[Any], oracle_report: OracleReport) -> List[GoldenCheck]:
        if self.config.specialize:
            return []
        f = self.family
        checks = []
        for golden in goldens_from_document(self.loader.load_document(self.config.family)):
            ode = find_equation([e for e in equations if isinstance(e, ReducedOde)], golden) \
                or find_equation(equations, golden)
            if ode is None:
                self.logger.debug(f"No derived equation for golden {golden.key}")
                continue
            label, branch = equation_label(ode), ode.branch.label
            entries = [e for e in oracle_report.entries if e.check == label and e.branch == branch]
            certified = bool(entries) and all(e.is_zero for e in entries)
            checks.append(compare_golden(golden, ode.coeffs, certified, f.ring))
        return checks


def _deg(value: Optional[int]) -> str:
    return "-inf" if value is None else str(value)


def run_pipeline(config: RunConfig, stream: Optional[TextIO] = None) -> RunResult:
    """Run one configured command and return its outcome."""
    return PipelineRunner(config, stream).run()

"""
Test Pipeline

Run configuration, golden tables, the pipeline commands with their
artifacts, and the command-line exit codes.
"""

import copy
import json
import os
import sys

import pytest

# Add the src directory to the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from derivation import BranchDeriver
from families import FamilyLoader, FamilySchemaError
from pipeline import (
    EXIT_CONFIGURATION_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    CommonConfigs,
    ConfigBuilder,
    ConfigurationError,
    ExecutionStrategy,
    PerformanceMonitor,
    ProcessingStrategyFactory,
    RunConfig,
    compare_golden,
    goldens_from_document,
    main,
    run_pipeline,
)


ROOT = os.path.join(os.path.dirname(__file__), '..')
FAMILY_DIR = os.path.join(ROOT, 'config', 'families')


def config(family, **changes):
    return RunConfig(family=family, family_dir=FAMILY_DIR, **changes)


def corrupt_family_file(tmp_path):
    document = copy.deepcopy(FamilyLoader(FAMILY_DIR).load_document('hermite_classical'))
    document['name'] = 'hermite_corrupt'
    document['D_seq']['branches'][0]['expr'] = "2"
    path = tmp_path / "hermite_corrupt.json"
    path.write_text(json.dumps(document), encoding='utf-8')
    return str(path)


# Configuration

def test_default_configuration():
    cfg = RunConfig(family='hermite_case1')
    assert cfg.command == 'all'
    assert cfg.residues() is None
    assert cfg.strategy == ExecutionStrategy.ADAPTIVE


@pytest.mark.parametrize("changes", [
    {'family': ''},
    {'command': 'plot'},
    {'branch': 'odd'},
    {'branch': '-1'},
    {'n_max': -1},
    {'assignments': {'tau': '0.5'}},
    {'specialize': {'rho': 'two'}},
    {'output_format': 'html'},
    {'max_workers': 0},
    {'log_level': 'VERBOSE'},
])
def test_invalid_configuration(changes):
    data = {'family': 'hermite_case1', **changes}
    with pytest.raises(ConfigurationError):
        RunConfig(**data)


def test_configuration_from_dict():
    cfg = RunConfig.from_dict({'family': 'hermite_case2', 'strategy': 'parallel',
                               'assignments': {'rho': 3}})
    assert cfg.strategy == ExecutionStrategy.PARALLEL
    assert cfg.assignments == {'rho': '3'}
    with pytest.raises(ConfigurationError):
        RunConfig.from_dict({'family': 'hermite_case2', 'strategy': 'fastest'})
    with pytest.raises(ConfigurationError):
        RunConfig.from_dict({'family': 'hermite_case2', 'colour': 'blue'})


def test_configuration_file_round_trip(tmp_path):
    cfg = ConfigBuilder('semiclassical_class1') \
        .with_branch(1) \
        .with_verification(n_max=5, assignments={'alpha': '1/3'}) \
        .with_output('latex', str(tmp_path / 'out')) \
        .build()
    path = tmp_path / 'nested' / 'run.json'
    cfg.save_to_file(str(path))
    loaded = RunConfig.from_file(str(path))
    assert loaded.to_dict() == cfg.to_dict()
    assert loaded.residues() == [1]
    assert loaded.parsed_assignments()['alpha'].denominator == 3


def test_bundled_run_configuration():
    cfg = RunConfig.from_file(os.path.join(ROOT, 'config', 'pipeline_config.json'))
    assert cfg.family == 'hermite_case1'
    assert cfg.command == 'all'


def test_copy_and_presets():
    quick = CommonConfigs.quick_check('hermite_classical')
    assert quick.command == 'verify' and quick.n_max == 4
    assert quick.strategy == ExecutionStrategy.SEQUENTIAL
    assert quick.copy(n_max=2).n_max == 2
    assert quick.n_max == 4
    assert CommonConfigs.ci('hermite_classical').log_level == 'WARNING'
    full = CommonConfigs.full_run('hermite_classical', output_path='out')
    assert full.include_witnesses and full.output_path == 'out'


# Goldens

def test_golden_tables_in_family_documents():
    loader = FamilyLoader(FAMILY_DIR)
    goldens = goldens_from_document(loader.load_document('hermite_classical'))
    assert [g.key for g in goldens] == [
        'r0m1/semiclassical_II/2', 'r0m1/semiclassical/3', 'r0m1/semiclassical/4']
    assert goldens_from_document({}) == []
    with pytest.raises(FamilySchemaError):
        goldens_from_document({'goldens': [{'branch': 'r0m1'}]})


def test_golden_comparison_is_up_to_a_factor():
    loader = FamilyLoader(FAMILY_DIR)
    f = loader.load_family('hermite_classical')
    golden = goldens_from_document(loader.load_document('hermite_classical'))[0]
    computed = [c.scale(-3) for c in golden.parse(f.ring)]
    check = compare_golden(golden, computed, certified=True, ring=f.ring)
    assert check.matches
    shuffled = list(reversed(golden.parse(f.ring)))
    check = compare_golden(golden, shuffled, certified=True, ring=f.ring)
    assert check.discrepancy
    assert check.to_dict()['status'] == 'golden discrepancy (display suspected)'


# Processing

@pytest.mark.parametrize("strategy", list(ExecutionStrategy))
def test_processors_keep_branch_order(strategy):
    f = FamilyLoader(FAMILY_DIR).load_family('semiclassical_class1')
    deriver = BranchDeriver(f)
    monitor = PerformanceMonitor()
    processor = ProcessingStrategyFactory.create_processor(strategy, deriver, monitor)
    assert processor.get_strategy_name() == strategy.value
    branches = deriver.branches()
    results = processor.process_branches(branches, config('semiclassical_class1', max_workers=2))
    assert [r.branch for r in results] == branches
    assert len(monitor.branch_times) == len(branches)


def test_performance_report():
    monitor = PerformanceMonitor()
    assert monitor.get_performance_report() == {'error': 'Monitoring not completed'}
    monitor.start_monitoring()
    monitor.record_branch_time('n (index >= 0)', 0.5)
    monitor.end_monitoring()
    report = monitor.get_performance_report()
    assert report['branches_derived'] == 1
    assert report['error_count'] == 0


# Commands

def test_all_command_writes_artifacts(tmp_path):
    out = tmp_path / 'out'
    result = run_pipeline(config('hermite_classical', n_max=4, output_path=str(out)))
    assert result.exit_code == EXIT_OK
    names = sorted(p.name for p in result.artifacts)
    assert names == [
        'hermite_classical_equations.txt',
        'hermite_classical_r0m1_derive.txt',
        'hermite_classical_r0m1_reduce.txt',
        'hermite_classical_verification.json',
    ]
    reduce_text = (out / 'hermite_classical_r0m1_reduce.txt').read_text(encoding='utf-8')
    assert "P'' - 2*x*P' + 2*(n+1)*P = 0" in reduce_text
    derive_text = (out / 'hermite_classical_r0m1_derive.txt').read_text(encoding='utf-8')
    assert "# degenerate: all five coefficients vanish identically (B = 0)" in derive_text
    report = json.loads((out / 'hermite_classical_verification.json').read_text(encoding='utf-8'))
    assert report['passed'] is True
    assert all(g['matches'] for g in report['goldens'])


def test_derive_without_output_writes_to_stream(capsys):
    result = run_pipeline(config('hermite_case2', command='derive'))
    assert result.exit_code == EXIT_OK
    assert result.artifacts == []
    out = capsys.readouterr().out
    assert "# branch: n=0" in out
    assert "# fourth-order Laguerre-Hahn equation" in out
    assert "M01 = 2*x" in out


def test_verify_selected_branch(capsys):
    result = run_pipeline(config('semiclassical_class1', command='verify', branch='1', n_max=5))
    assert result.exit_code == EXIT_OK
    assert result.verification['passed'] is True
    assert "Verification passed" in capsys.readouterr().out


def test_branch_residue_out_of_range():
    with pytest.raises(ConfigurationError):
        run_pipeline(config('hermite_case1', command='derive', branch='1'))


def test_class_command(capsys, tmp_path):
    result = run_pipeline(config('semiclassical_class1', command='class', output_path=str(tmp_path)))
    assert result.class_report['s'] == 1
    out = capsys.readouterr().out
    assert "deg Phi = 3, deg psi = 2, deg B = -inf" in out
    assert "class s = 1" in out
    assert "B = 0: semiclassical" in out
    assert [p.name for p in result.artifacts] == ['semiclassical_class1_class.json']


def test_verify_with_specialization(capsys):
    cfg = config('hermite_case1', command='verify', n_max=4, specialize={'tau': '0', 'lambda': '0', 'rho': '1'})
    assert run_pipeline(cfg).exit_code == EXIT_OK
    assert "Verification passed" in capsys.readouterr().out


# Command line

def test_cli_verify_passes(capsys):
    code = main(['verify', '--family', 'hermite_case1', '--family-dir', FAMILY_DIR, '--n-max', '4',
                 '--assign', 'tau=2', '--log-level', 'WARNING'])
    assert code == EXIT_OK
    assert "Verification passed" in capsys.readouterr().out


def test_cli_corrupt_family_fails_verification(tmp_path, capsys):
    code = main(['verify', '--family', corrupt_family_file(tmp_path), '--n-max', '3',
                 '--strategy', 'sequential', '--log-level', 'ERROR'])
    assert code == EXIT_VERIFICATION_FAILED
    assert "Verification FAILED" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ['verify'],
    ['verify', '--family', 'no_such_family'],
    ['verify', '--family', 'hermite_case1', '--assign', 'tau'],
    ['verify', '--family', 'hermite_case1', '--assign', 'mu=1'],
    ['derive', '--family', 'hermite_case1', '--branch', 'odd'],
])
def test_cli_configuration_errors(argv):
    assert main(argv + ['--family-dir', FAMILY_DIR, '--log-level', 'CRITICAL']) == EXIT_CONFIGURATION_ERROR


def test_cli_config_file_with_override(tmp_path, capsys):
    path = tmp_path / 'run.json'
    CommonConfigs.quick_check('hermite_classical').copy(family_dir=FAMILY_DIR).save_to_file(str(path))
    code = main(['class', '--config', str(path), '--log-level', 'WARNING'])
    assert code == EXIT_OK
    assert "family: hermite_classical" in capsys.readouterr().out


if __name__ == "__main__":
    print("Running pipeline smoke check")
    print("=" * 50)
    outcome = run_pipeline(CommonConfigs.quick_check('hermite_classical').copy(family_dir=FAMILY_DIR))
    print(f"  ✓ exit code: {outcome.exit_code}")

"""
命令行入口测试
"""

import json

import pytest

import run
from src.core.report import LemmaReport, SubCheck
from src.services import SuiteService


@pytest.fixture
def missing_config(tmp_path):
    return str(tmp_path / 'missing.conf')


def test_no_command_prints_help(capsys):
    assert run.main([]) == run.EXIT_OK
    assert 'suite' in capsys.readouterr().out


def test_bad_samples_is_config_error(missing_config, capsys):
    assert run.main(['-c', missing_config, 'suite', '--samples', '0']) == run.EXIT_CONFIG
    assert '配置错误' in capsys.readouterr().err


def test_unparsable_number_is_config_error(missing_config):
    assert run.main(['-c', missing_config, 'suite', '--seed', 'abc']) == run.EXIT_CONFIG


def test_unknown_family_is_config_error(missing_config):
    assert run.main(['-c', missing_config, 'suite', '--families', 'su:2,5']) == run.EXIT_CONFIG


def test_init_config(tmp_path):
    target = tmp_path / 'suite.conf'
    assert run.main(['init-config', '--path', str(target)]) == run.EXIT_OK
    assert 'families =' in target.read_text(encoding='utf-8')


def test_families(missing_config, capsys):
    assert run.main(['-c', missing_config, 'families']) == run.EXIT_OK
    out = capsys.readouterr().out
    assert 'SU(3,2)' in out
    assert 'SO*(8)' in out


def test_passing_suite(tmp_path, missing_config, capsys):
    out = tmp_path / 'report.json'
    code = run.main([
        '-c', missing_config, 'suite',
        '--checks', 'higgs', '--families', 'su:3,2', 'sp:2',
        '--samples', '20', '--out', str(out),
    ])
    assert code == run.EXIT_OK
    data = json.loads(out.read_text(encoding='utf-8'))
    assert [r['check_name'] for r in data] == [
        'higgs:su:3,2', 'higgs:milnor_wood:su:3,2', 'higgs:sp:2', 'higgs:milnor_wood:sp:2',
    ]
    assert '通过 4' in capsys.readouterr().out


def test_failing_suite(missing_config, monkeypatch):
    failing = LemmaReport.from_subchecks('x', 'c', [SubCheck.measure('a', 1.0, 0.0)], 1, 1)
    monkeypatch.setattr(SuiteService, 'run', lambda self: [failing])
    assert run.main(['-c', missing_config, 'suite', '--checks', 'higgs']) == run.EXIT_FAILED


def test_write_failure(tmp_path, missing_config, monkeypatch):
    blocker = tmp_path / 'file'
    blocker.write_text('x', encoding='utf-8')
    monkeypatch.setattr(SuiteService, 'run', lambda self: [])
    code = run.main(['-c', missing_config, 'suite', '--checks', 'higgs', '--out', str(blocker / 'r.json')])
    assert code == run.EXIT_CONFIG


@pytest.mark.slow
def test_default_suite_passes(tmp_path, missing_config):
    out = tmp_path / 'report.json'
    assert run.main(['-c', missing_config, 'suite', '--out', str(out)]) == run.EXIT_OK
    data = json.loads(out.read_text(encoding='utf-8'))
    failed = [r['check_name'] for r in data if r['status'] != 'pass']
    assert data and not failed

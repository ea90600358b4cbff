"""
配置加载测试
"""

from pathlib import Path

import pytest

from config import ConfigLoader, KNOWN_CHECKS, Settings, get_settings
from src.core.errors import ConfigParseError


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for key in ('HCL_SEED', 'HCL_SAMPLES', 'HCL_TOLERANCE_BOUND', 'HCL_FAMILIES'):
        monkeypatch.delenv(key, raising=False)


def _write(tmp_path: Path, text: str) -> Path:
    path = tmp_path / 'suite.conf'
    path.write_text(text, encoding='utf-8')
    return path


def test_defaults_without_file(tmp_path):
    settings = ConfigLoader(str(tmp_path / 'missing.conf')).load()
    assert settings.suite.samples == 10000
    assert settings.suite.seed == 42
    assert settings.suite.tol == 1e-8
    assert settings.suite.checks == list(KNOWN_CHECKS)
    assert settings.suite.families[0] == 'su:3,2'
    assert settings.suite.levi_sizes == (5, 7)
    assert settings.suite.output_path is None
    assert get_settings() is settings


def test_file_values(tmp_path):
    path = _write(tmp_path, '\n'.join([
        '# 注释',
        'families = su:4,2 sp:2',
        'samples = 25   # 行尾注释',
        'checks = levi, higgs',
        'levi_sizes = 5',
        'tolerance.bound = 1e-7',
        'output.pretty_print = false',
        'out = reports/r.json',
    ]))
    settings = ConfigLoader(str(path)).load()
    assert settings.suite.families == ['su:4,2', 'sp:2']
    assert settings.suite.samples == 25
    assert settings.suite.checks == ['levi', 'higgs']
    assert settings.suite.levi_sizes == (5,)
    assert settings.tolerance.bound == 1e-7
    assert settings.output.pretty_print is False
    assert settings.suite.output_path == Path('reports/r.json')


def test_env_overrides_file(tmp_path, monkeypatch):
    path = _write(tmp_path, 'seed = 1\n')
    monkeypatch.setenv('HCL_SEED', '7')
    monkeypatch.setenv('HCL_TOLERANCE_BOUND', '1e-6')
    settings = ConfigLoader(str(path)).load()
    assert settings.suite.seed == 7
    assert settings.tolerance.bound == 1e-6


def test_cli_overrides_env(tmp_path, monkeypatch):
    monkeypatch.setenv('HCL_SEED', '7')
    settings = ConfigLoader(str(tmp_path / 'missing.conf')).load({'seed': '99', 'samples': None})
    assert settings.suite.seed == 99
    assert settings.suite.samples == 10000


@pytest.mark.parametrize('overrides', [
    {'samples': '0'},
    {'samples': 'many'},
    {'tol': '-1'},
    {'checks': 'levi,bogus'},
    {'families': 'su:2,3'},
    {'levi_sizes': '6'},
    {'workers': '0'},
])
def test_invalid_values(tmp_path, overrides):
    with pytest.raises(ConfigParseError):
        ConfigLoader(str(tmp_path / 'missing.conf')).load(overrides)


def test_line_without_equals(tmp_path):
    path = _write(tmp_path, 'samples = 3\nbroken line\n')
    with pytest.raises(ConfigParseError) as excinfo:
        ConfigLoader(str(path)).load()
    assert excinfo.value.details['line'] == 2


def test_template_round_trip(tmp_path):
    target = tmp_path / 'suite.conf.template'
    ConfigLoader.create_template(str(target))
    text = target.read_text(encoding='utf-8')
    assert 'tolerance.extremizer' in text
    settings = ConfigLoader(str(target)).load()
    assert settings.to_dict() == Settings().to_dict()

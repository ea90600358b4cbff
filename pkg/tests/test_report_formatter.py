"""
报告格式化测试
"""

import json

import pytest

from src.core.errors import WriteFailureError
from src.core.report import LemmaReport, SubCheck
from src.utils import ReportFormatter


@pytest.fixture
def reports():
    levi = LemmaReport.from_subchecks(
        'levi:n=5', '5 维核', [SubCheck.measure('max_eigenvalue', 0.1, 1e-8, note='说明')], 200, 7
    )
    youla = LemmaReport.from_subchecks(
        'youla', 'Youla 分解', [SubCheck.failure('error:NoConvergenceError', '不收敛')], 10, 3
    )
    return [levi, youla]


def test_json_structure(reports):
    text = ReportFormatter().to_json(reports)
    data = json.loads(text)
    assert isinstance(data, list)
    assert [r['check_name'] for r in data] == ['levi:n=5', 'youla']
    assert list(data[0]) == ['check_name', 'paper_anchor', 'status', 'max_residual', 'samples', 'seed', 'details']
    assert data[0]['status'] == 'fail'
    assert text.endswith('\n')
    assert '5 维核' in text


def test_json_float_precision(reports):
    text = ReportFormatter().to_json(reports)
    assert '"residual": 0.10000000000000001' in text
    assert '"tolerance": 1e-08' in text
    assert json.loads(text)[0]['details'][0]['residual'] == 0.1


def test_json_integral_float_keeps_point():
    report = LemmaReport.from_subchecks('x', 'c', [SubCheck.measure('a', 2.0, 3.0)], 1, 1)
    text = ReportFormatter().to_json([report])
    assert '"residual": 2.0' in text
    assert '"samples": 1,' in text


def test_json_non_finite_as_string(reports):
    data = json.loads(ReportFormatter().to_json(reports))
    assert data[1]['max_residual'] == 'inf'
    assert data[1]['details'][0]['residual'] == 'inf'


def test_json_compact(reports):
    text = ReportFormatter(pretty_print=False).to_json(reports)
    assert text.count('\n') == 1


def test_json_is_reproducible(reports):
    formatter = ReportFormatter()
    assert formatter.to_json(reports) == formatter.to_json(list(reports))


def test_text_render(reports):
    text = ReportFormatter().to_text(reports)
    assert '[FAIL] levi:n=5' in text
    assert '!! max_eigenvalue' in text
    assert '(说明)' in text
    assert '共 2 项，通过 0，失败 2' in text
    assert '失败: youla' in text


def test_summary(reports):
    passing = LemmaReport.from_subchecks('ok', 'c', [SubCheck.measure('a', 0.0, 1.0)], 1, 1)
    summary = ReportFormatter.summary(reports + [passing])
    assert summary == {'total': 3, 'passed': 1, 'failed': 2, 'failed_checks': ['levi:n=5', 'youla']}


def test_write_creates_directories(tmp_path):
    target = tmp_path / 'a' / 'b' / 'report.json'
    ReportFormatter.write('[]\n', target)
    assert target.read_text(encoding='utf-8') == '[]\n'


def test_write_failure(tmp_path):
    blocker = tmp_path / 'file'
    blocker.write_text('x', encoding='utf-8')
    with pytest.raises(WriteFailureError):
        ReportFormatter.write('[]', blocker / 'report.json')

"""
校验报告模型测试
"""

import dataclasses
import math

from src.core.report import LemmaReport, ReportStatus, SubCheck


def test_measure_pass_and_fail():
    assert SubCheck.measure('a', 1e-12, 1e-10).passed
    assert not SubCheck.measure('a', 1e-9, 1e-10).passed
    assert SubCheck.measure('a', 0.0, 0.0).passed


def test_nan_residual_fails():
    check = SubCheck.measure('a', math.nan, 1.0)
    assert not check.passed


def test_failure_record():
    check = SubCheck.failure('error:ValueError', 'boom')
    assert not check.passed
    assert math.isinf(check.residual)
    assert check.note == 'boom'


def test_status_from_subchecks():
    ok = SubCheck.measure('ok', 0.0, 1.0)
    bad = SubCheck.measure('bad', 2.0, 1.0)
    report = LemmaReport.from_subchecks('x', 'claim', [ok, bad], 10, 1)
    assert report.status == ReportStatus.FAIL
    assert report.max_residual == 2.0
    assert report.failed_subchecks == [bad]

    report = LemmaReport.from_subchecks('x', 'claim', [ok], 10, 1)
    assert report.passed


def test_empty_subchecks_fail():
    report = LemmaReport.from_subchecks('x', 'claim', [], 10, 1)
    assert not report.passed
    assert report.max_residual == 0.0


def test_to_dict_field_order():
    report = LemmaReport.from_subchecks('x', 'levi 核维数', [SubCheck.measure('ok', 0.0, 1.0, note='n')], 3, 7)
    data = report.to_dict()
    assert list(data) == ['check_name', 'paper_anchor', 'status', 'max_residual', 'samples', 'seed', 'details']
    assert list(data) == [f.name for f in dataclasses.fields(LemmaReport)]
    assert data['paper_anchor'] == 'levi 核维数'
    assert data['status'] == 'pass'
    assert list(data['details'][0]) == ['name', 'residual', 'tolerance', 'passed', 'note']

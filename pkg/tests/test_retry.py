"""
容差递增重试测试
"""

import pytest

from src.core.errors import PairingFailureError
from src.utils import RetryConfig, retry, retry_with_config


def _needs_loose(threshold):
    seen = []

    def check(value, tol=1e-12):
        seen.append(tol)
        if tol < threshold:
            raise PairingFailureError("容差过严", {'tol': tol})
        return value

    return check, seen


def test_escalates_until_success():
    check, seen = _needs_loose(5e-10)
    wrapped = retry(max_attempts=5, exceptions=(PairingFailureError,))(check)
    assert wrapped('ok', tol=1e-12) == 'ok'
    assert seen == pytest.approx([1e-12, 1e-11, 1e-10, 1e-9])


def test_gives_up_after_max_attempts():
    check, seen = _needs_loose(1.0)
    wrapped = retry_with_config(RetryConfig(max_attempts=2, exceptions=(PairingFailureError,)))(check)
    with pytest.raises(PairingFailureError):
        wrapped('x', tol=1e-12)
    assert len(seen) == 2


def test_other_exceptions_propagate():
    def broken(tol=1.0):
        raise KeyError('x')

    wrapped = retry(max_attempts=3, exceptions=(PairingFailureError,))(broken)
    with pytest.raises(KeyError):
        wrapped(tol=1.0)


def test_requires_keyword_tolerance():
    check, _ = _needs_loose(0.0)
    with pytest.raises(TypeError):
        retry()(check)('x')


def test_on_retry_callback():
    attempts = []
    check, _ = _needs_loose(5e-11)
    config = RetryConfig(
        max_attempts=4, escalation_factor=100.0, exceptions=(PairingFailureError,),
        on_retry=lambda attempt, e: attempts.append(attempt)
    )
    assert retry_with_config(config)(check)('y', tol=1e-12) == 'y'
    assert attempts == [1]

"""
测试公共夹具
"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.core.spaces import HermitianFamily  # noqa: E402
from src.utils import LoggerFactory  # noqa: E402

ACCEPTANCE_FAMILIES = ['su:3,2', 'su:4,2', 'su:3,3', 'sp:3', 'so:5,2', 'sostar:4']


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(42)


@pytest.fixture(params=ACCEPTANCE_FAMILIES)
def family(request) -> HermitianFamily:
    return HermitianFamily.parse(request.param)


@pytest.fixture(autouse=True)
def _reset_logging():
    yield
    LoggerFactory.reset()

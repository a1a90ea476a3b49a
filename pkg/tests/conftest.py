from pathlib import Path

import pytest

from parasim.kb_io import load_kb

SAMPLE_FOLDER = Path(__file__).resolve().parent.parent / 'data' / 'sample'


@pytest.fixture
def sample_folder():
    return SAMPLE_FOLDER


@pytest.fixture
def simple_kb():
    """K1 = {p1, p2, !p3}, K2 = {p2, p3, !p1}."""
    return load_kb(SAMPLE_FOLDER / 'simple.kb')


@pytest.fixture
def medical_kb():
    """Five diagnostic records."""
    return load_kb(SAMPLE_FOLDER / 'medical.kb')


@pytest.fixture
def conflicted_kb():
    return load_kb(SAMPLE_FOLDER / 'conflicted.kb')

from pathlib import Path

import pytest

from ezd import GF, build_ring

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture(scope="session")
def F7():
    return GF(7)


@pytest.fixture(scope="session")
def ci3(F7):
    return build_ring(F7, ["x1", "x2", "x3"], ["x1^2", "x2^2 + x1*x3", "x3^2"])


@pytest.fixture(scope="session")
def ci2(F7):
    return build_ring(F7, ["x1", "x2"], ["x1^2 + x2^2", "x1*x2"])


@pytest.fixture(scope="session")
def trunc4(F7):
    return build_ring(F7, ["x"], ["x^4"])


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS

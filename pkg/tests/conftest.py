import pytest

from nbpoly.corpus import random_corpus
from nbpoly.graph import family

# the standard 500-graph corpus: n <= 14, p cycling through 0.2 / 0.5 / 0.8
CORPUS_SEED = 20240501


@pytest.fixture(scope="session")
def corpus500():
    return random_corpus(500, 14, CORPUS_SEED)


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(60, 8, 11)


@pytest.fixture
def P3():
    return family("path", 3)


@pytest.fixture
def C4():
    return family("cycle", 4)


@pytest.fixture
def K2():
    return family("complete", 2)

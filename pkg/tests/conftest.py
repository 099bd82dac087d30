import pytest

from toric_cox.corpus import SMOOTH_COMPLETE, load_fan
from toric_cox.cox import cox_data


@pytest.fixture(scope="session")
def corpus():
    return {name: load_fan(name) for name in SMOOTH_COMPLETE}


@pytest.fixture(scope="session")
def corpus_cox(corpus):
    return {name: cox_data(fan) for name, fan in corpus.items()}


@pytest.fixture(scope="session")
def p2(corpus):
    return corpus["p2"]


@pytest.fixture(scope="session")
def p1(corpus):
    return corpus["p1"]


@pytest.fixture(scope="session")
def p1xp1(corpus):
    return corpus["p1xp1"]


@pytest.fixture(scope="session")
def hirzebruch_1(corpus):
    return corpus["hirzebruch_1"]

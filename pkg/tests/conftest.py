import pytest

from germlab import RingContext, bundled_corpus


@pytest.fixture
def ctx2():
    return RingContext(("x", "y"))


@pytest.fixture
def ctx3():
    return RingContext(("x", "y", "z"))


@pytest.fixture(scope="session")
def corpus_entries():
    return bundled_corpus()

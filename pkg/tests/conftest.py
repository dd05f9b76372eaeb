import pytest

from lcslie import corpus


@pytest.fixture(scope="session")
def shipped():
    """Every record in the packaged corpus."""
    return corpus.load_corpus(corpus.default_corpus_path())


@pytest.fixture(scope="session")
def by_name(shipped):
    return {entry.name: entry for entry in shipped}

import pytest

from torusjones import TorusKnot, jones_sequence


@pytest.fixture(scope="session")
def jcache():
    """Session-wide colored Jones sequences so expensive values are shared."""
    seqs = {}

    def get(K: TorusKnot):
        if K not in seqs:
            seqs[K] = jones_sequence(K)
        return seqs[K]

    return get

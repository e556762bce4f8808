import itertools
from functools import lru_cache

import pytest


@lru_cache(maxsize=None)
def all_inversion_sequences(n: int) -> tuple[tuple[int, ...], ...]:
    """Every length-n inversion sequence, lexicographically."""
    seqs = [()]
    for i in range(1, n + 1):
        seqs = [s + (v,) for s in seqs for v in range(i)]
    return tuple(seqs)


@pytest.fixture(scope="session")
def invseqs():
    return all_inversion_sequences

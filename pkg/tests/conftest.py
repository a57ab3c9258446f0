import random
from itertools import product

import pytest

from quiverstab import QuiverAn


def all_words(n: int):
    """All orientation words of A_n in lexicographic order."""
    return ["".join(bits) for bits in product("LR", repeat=n - 1)]


def words_up_to(max_n: int):
    for n in range(1, max_n + 1):
        yield from all_words(n)


@pytest.fixture
def rng():
    return random.Random(20260809)


def quivers_up_to(max_n: int):
    return [QuiverAn(w) for w in words_up_to(max_n)]

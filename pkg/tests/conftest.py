import itertools

import pytest

from treealg import enumerate_forests


def all_words(max_len, include_empty=True):
    words = [""] if include_empty else []
    for n in range(1, max_len + 1):
        words.extend("".join(p) for p in itertools.product("xy", repeat=n))
    return words


def forests_up_to(max_degree, include_empty=True):
    lo = 0 if include_empty else 1
    return [f for d in range(lo, max_degree + 1) for f in enumerate_forests(d)]


@pytest.fixture(scope="session")
def small_forests():
    return forests_up_to(4)


@pytest.fixture(scope="session")
def small_words():
    return all_words(4)

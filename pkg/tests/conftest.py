import random

import pytest

from adjreal.gaussian import GaussRat
from adjreal.liecore import LieContext


@pytest.fixture
def rng():
    return random.Random(0)


def ctx(algebra: str, group: str, n: int) -> LieContext:
    return LieContext(algebra, group, n)


SMALL_SCALARS = [
    GaussRat.from_int(0),
    GaussRat.from_int(1),
    GaussRat.from_int(-1),
    GaussRat.from_int(2),
    GaussRat.parse("i"),
    GaussRat.parse("-i"),
    GaussRat.parse("1/2"),
    GaussRat.parse("1-1*i"),
]


def random_scalar(rng, pool=SMALL_SCALARS):
    return rng.choice(pool)

import random

import pytest

from grothlat.checks import random_poly
from grothlat.polyring import VarRegistry


@pytest.fixture
def rng():
    return random.Random(987123)


@pytest.fixture
def reg():
    return VarRegistry(3, 3)


def sample_polys(reg, rng, count, **kw):
    return [random_poly(reg, rng, **kw) for _ in range(count)]

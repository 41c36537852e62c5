import random

import pytest

from outerdraw.gen import gen_outerpath, gen_random


def random_corpus(count, n_lo=3, n_hi=120, seed=0):
    """Mixed-density random outerplane graphs, deterministic in ``seed``."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(n_lo, n_hi)
        dens = rng.choice([0.0, 0.1, 0.3, 0.6, 1.0])
        out.append(gen_random(n, dens, rng.getrandbits(32)))
    return out


def outerpath_corpus(count, seed=0):
    rng = random.Random(seed)
    return [gen_outerpath(rng.randint(1, 40), rng.randint(3, 10), rng.getrandbits(32)) for _ in range(count)]


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(60, seed=11)

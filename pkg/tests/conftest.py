import random

import pytest

from blowup.groebner import Ideal
from blowup.polynomial import GF, QQ, PolyRing


@pytest.fixture
def R2():
    return PolyRing(["x", "y"], QQ)


@pytest.fixture
def R3():
    return PolyRing(["x", "y", "z"], QQ)


@pytest.fixture
def R3p():
    return PolyRing(["x", "y", "z"], GF(32003))


def random_monomial_ideal(rng: random.Random, ring, max_deg=6, count=None, primary=True):
    """Monomial ideal with random generators; m-primary when ``primary`` (pure powers included)."""
    n = ring.nvars
    gens = []
    if primary:
        for i in range(n):
            e = [0] * n
            e[i] = rng.randint(1, max_deg)
            gens.append(tuple(e))
    for _ in range(rng.randint(0, 4) if count is None else count):
        deg = rng.randint(1, max_deg)
        e = [0] * n
        for _ in range(deg):
            e[rng.randrange(n)] += 1
        gens.append(tuple(e))
    return Ideal(ring, [ring.monomial(e) for e in gens])


def random_polynomial(rng: random.Random, ring, max_deg=5, terms=4, homogeneous=False):
    n = ring.nvars
    f = ring.zero()
    deg0 = rng.randint(1, max_deg)
    for _ in range(rng.randint(1, terms)):
        deg = deg0 if homogeneous else rng.randint(0, max_deg)
        e = [0] * n
        for _ in range(deg):
            e[rng.randrange(n)] += 1
        f = f + ring.monomial(e, rng.randint(-9, 9) or 1)
    return f

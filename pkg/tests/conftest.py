import random

import pytest

from kostant_bounds.domain.families import NamedFamily, family
from kostant_bounds.domain.netflow import make_netflow


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def tesler3():
    """(1, 1, 1, -3): K = 7."""
    return make_netflow([1, 1, 1, -3])


@pytest.fixture
def cry3():
    """(1, 0, 0, -1): K = 4."""
    return make_netflow([1, 0, 0, -1])


@pytest.fixture
def small_netflows():
    """Family members and a few mixed-sign netflows with every partial sum positive."""
    members = [
        family(NamedFamily('tesler'), n) for n in (2, 3, 4)
    ] + [
        family(NamedFamily('cry', t=2), n) for n in (2, 3, 4)
    ] + [
        family(NamedFamily('staircase', t=1), n) for n in (2, 3)
    ] + [
        family(NamedFamily('two_rho', t=1), n) for n in (2, 3)
    ]
    mixed = [make_netflow(values) for values in ([2, -1, 1, -2], [1, 1, -1, 2, -3], [3, -2, 0, -1])]
    return members + mixed

import functools
import pathlib

import pytest

from toromaps.oracle import enumerate_H
from toromaps.unicellular import enumerate_Ubal

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@functools.lru_cache(maxsize=None)
def ubal(max_leaves):
    return tuple(enumerate_Ubal(max_leaves))


@functools.lru_cache(maxsize=None)
def hexagon_maps(max_edges):
    return tuple(enumerate_H(max_edges))


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def ubal3():
    return ubal(3)


@pytest.fixture(scope="session")
def hmaps():
    return hexagon_maps(9)

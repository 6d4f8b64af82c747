import pytest

from critind import Graph, fixture


@pytest.fixture
def g1() -> Graph:
    return fixture("G1")


@pytest.fixture
def g2() -> Graph:
    return fixture("G2")


@pytest.fixture
def gf() -> Graph:
    return fixture("GF")


@pytest.fixture
def k0() -> Graph:
    return Graph([], [])


@pytest.fixture
def k3() -> Graph:
    return Graph(["x", "y", "z"], [(0, 1), (1, 2), (0, 2)])

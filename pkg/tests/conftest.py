from __future__ import annotations

import pytest

from nearnormal.corpus import (
    complete_graph_k4,
    k33,
    petersen_graph,
    prism,
    triple_edge,
)


@pytest.fixture(scope="session")
def petersen():
    return petersen_graph()


@pytest.fixture(scope="session")
def k4():
    return complete_graph_k4()


@pytest.fixture(scope="session")
def k_3_3():
    return k33()


@pytest.fixture(scope="session")
def prism5():
    return prism(5)


@pytest.fixture(scope="session")
def triple():
    return triple_edge()

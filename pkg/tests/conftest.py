# -*- coding: utf-8 -*-
from __future__ import annotations

import networkx as nx
import pytest

from srg_lab.graph import Graph
from srg_lab.paley import paley_graph
from srg_lab.params import SrgParams


# Fixtures
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@pytest.fixture
def k3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c5() -> Graph:
    return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def p5() -> Graph:
    """Path on 5 vertices."""
    return Graph.from_edges(5, [(i, i + 1) for i in range(4)])


@pytest.fixture
def paley9() -> Graph:
    return paley_graph(9)


@pytest.fixture
def paley13() -> Graph:
    return paley_graph(13)


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def srg_fixtures(k3, c5, paley9, paley13, petersen):
    """Known strongly regular graphs with their parameters."""
    return [
        (k3, SrgParams(3, 2, 1, 2)),
        (c5, SrgParams(5, 2, 0, 1)),
        (paley9, SrgParams(9, 4, 1, 2)),
        (paley13, SrgParams(13, 6, 2, 3)),
        (petersen, SrgParams(10, 3, 0, 1)),
    ]

# -*- coding: utf-8 -*-
from __future__ import annotations

import networkx as nx
import pytest

from srg_lab.graph import is_strongly_regular
from srg_lab.paley import PaleyOrderError, paley_graph
from srg_lab.params import SrgParams


@pytest.mark.parametrize("q, params", [
    (5, SrgParams(5, 2, 0, 1)),
    (9, SrgParams(9, 4, 1, 2)),
    (13, SrgParams(13, 6, 2, 3)),
    (17, SrgParams(17, 8, 3, 4)),
])
def test_paley_is_strongly_regular(q, params):
    assert is_strongly_regular(paley_graph(q), params).is_srg


def test_paley9_is_rook_graph(paley9):
    """GF(9) with index a + 3b gives the 3x3 rook's graph."""
    rook = nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(3))
    assert nx.is_isomorphic(paley9.to_networkx(), rook)
    assert paley9.neighbors(0) == [1, 2, 3, 6]


@pytest.mark.parametrize("q", [7, 11, 15, 25, 1])
def test_unsupported_orders(q):
    with pytest.raises(PaleyOrderError):
        paley_graph(q)

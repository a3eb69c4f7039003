# -*- coding: utf-8 -*-
from __future__ import annotations

import random

import networkx as nx
import pytest

from srg_lab.graph import (
    Graph,
    GraphInputError,
    common_neighbors,
    induced_subgraph,
    is_strongly_regular,
    neighborhood_is_matching,
    triangle_count,
    triangles_through,
)
from srg_lab.params import SrgParams


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Helpers
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _pentagonal_prism() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Construction
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestConstruction:

    def test_from_edges_is_symmetric(self, k3):
        """Verify edges are stored in both rows."""
        assert k3.adj == (0b110, 0b101, 0b011)
        assert k3.edge_count() == 3

    def test_asymmetric_rows_rejected(self):
        """Verify a one-sided adjacency row is rejected."""
        with pytest.raises(GraphInputError, match="asymmetric"):
            Graph(2, (0b10, 0))

    def test_loop_rejected(self):
        """Verify a loop is rejected."""
        with pytest.raises(GraphInputError, match="loop"):
            Graph(1, (0b1,))

    def test_invalid_edge_rejected(self):
        """Verify out-of-range edges are rejected."""
        with pytest.raises(GraphInputError):
            Graph.from_edges(3, [(0, 3)])

    def test_vertex_limit(self):
        """Verify graphs above the serialization limit are rejected."""
        with pytest.raises(GraphInputError, match="vertex count"):
            Graph.empty(63)

    def test_with_edge_toggles(self, c5):
        """Verify with_edge adds and removes a single pair."""
        added = c5.with_edge(0, 2)
        assert added.has_edge(0, 2) and added.has_edge(2, 0)
        assert added.with_edge(0, 2, present=False) == c5

    def test_networkx_round_trip(self, petersen):
        """Verify networkx interop keeps the isomorphism class."""
        assert nx.is_isomorphic(petersen.to_networkx(), nx.petersen_graph())
        assert Graph.from_networkx(petersen.to_networkx()) == petersen


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Common Neighbors
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestCommonNeighbors:

    def test_paley9_adjacent_pairs(self, paley9):
        """Verify every adjacent pair of Paley(9) shares one neighbor."""
        assert all(common_neighbors(paley9, u, v) == 1 for u, v in paley9.edges())

    def test_k3(self, k3):
        """Verify the third vertex is the unique common neighbor."""
        assert common_neighbors(k3, 0, 1) == 1

    def test_c5_non_adjacent(self, c5):
        """Verify non-adjacent pairs of the 5-cycle share one neighbor."""
        assert common_neighbors(c5, 0, 2) == 1
        assert common_neighbors(c5, 1, 4) == 1

    def test_same_vertex_rejected(self, k3):
        """Verify a pair needs two distinct vertices."""
        with pytest.raises(GraphInputError):
            common_neighbors(k3, 1, 1)

    def test_out_of_range_rejected(self, k3):
        """Verify an out-of-range vertex is an input error."""
        with pytest.raises(GraphInputError, match="out of range"):
            common_neighbors(k3, 0, 3)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Strong Regularity
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class TestIsStronglyRegular:

    def test_known_fixtures_pass(self, srg_fixtures):
        """Verify all known strongly regular fixtures pass."""
        for g, p in srg_fixtures:
            report = is_strongly_regular(g, p)
            assert report.is_srg, p
            assert report.violating_pair is None and report.degree_violation is None
            assert report.reason == "ok"

    def test_paley9_mu_pairs_counted(self, paley9):
        """Verify all 18 non-adjacent pairs of Paley(9) are checked."""
        report = is_strongly_regular(paley9, SrgParams(9, 4, 1, 2))
        assert report.mu_checked_pairs == 18

    def test_identity_violation(self, paley9):
        """Verify parameters failing k(k-l-1) = (n-k-1)mu are reported."""
        report = is_strongly_regular(paley9, SrgParams(9, 4, 1, 3))
        assert not report.is_srg
        assert report.identity_violation
        assert report.reason == "identity_violation"

    def test_degree_violation(self, p5):
        """Verify the path fails at its first endpoint."""
        report = is_strongly_regular(p5, SrgParams(5, 2, 0, 1))
        assert report.reason == "degree_violation"
        assert report.degree_violation.v == 0
        assert report.degree_violation.observed == 1

    def test_lambda_violation(self):
        """Verify an adjacent pair with too many common neighbors is reported."""
        k4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        report = is_strongly_regular(k4, SrgParams(4, 3, 1, 1))
        assert report.reason == "lambda_violation"
        pair = report.violating_pair
        assert (pair.u, pair.v, pair.observed, pair.expected) == (0, 1, 2, 1)

    def test_mu_violation(self):
        """Verify the pentagonal prism fails mu at (0, 6)."""
        report = is_strongly_regular(_pentagonal_prism(), SrgParams(10, 3, 0, 1))
        assert report.reason == "mu_violation"
        pair = report.violating_pair
        assert (pair.u, pair.v, pair.observed, pair.expected) == (0, 6, 2, 1)
        assert not pair.adjacent
        assert report.mu_checked_pairs == 3

    def test_order_mismatch(self, k3):
        """Verify p.n must equal g.n."""
        with pytest.raises(GraphInputError, match="order mismatch"):
            is_strongly_regular(k3, SrgParams(9, 4, 1, 2))

    def test_relabeling_keeps_regularity(self, paley9):
        """Verify random relabelings of Paley(9) stay srg(9,4,1,2)."""
        rng = random.Random(9)
        for _ in range(10):
            perm = list(range(9))
            rng.shuffle(perm)
            assert is_strongly_regular(paley9.relabel(perm), SrgParams(9, 4, 1, 2)).is_srg

    def test_report_to_dict(self, p5):
        """Verify the report serializes its reason."""
        data = is_strongly_regular(p5, SrgParams(5, 2, 0, 1)).to_dict()
        assert data["is_srg"] is False
        assert data["reason"] == "degree_violation"
        assert data["degree_violation"] == {"v": 0, "observed": 1}


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Tests - Triangles
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def test_triangle_count_matches_nk_lambda(srg_fixtures):
    for g, p in srg_fixtures:
        assert triangle_count(g) == p.n * p.k * p.lam // 6


def test_triangles_through_each_vertex(srg_fixtures):
    for g, p in srg_fixtures:
        assert all(triangles_through(g, v) == p.k * p.lam // 2 for v in range(g.n))


def test_triangle_count_agrees_with_networkx(paley13):
    assert triangle_count(paley13) == 26
    assert sum(nx.triangles(paley13.to_networkx()).values()) // 3 == 26


def test_induced_subgraph_relabels_ascending(paley9):
    sub = induced_subgraph(paley9, [6, 0, 3])
    assert sub.n == 3
    assert sub.edge_count() == 3


def test_neighborhood_is_matching(paley9, paley13):
    assert all(neighborhood_is_matching(paley9, v) for v in range(9))
    assert not neighborhood_is_matching(paley13, 0)

# -*- coding: utf-8 -*-
"""Matrix form of strong regularity: A^2 = kI + λA + μ(J - I - A), checked in exact
int64 arithmetic. For a k-regular graph this is equivalent to having at most three
distinct eigenvalues with k simple when the graph is connected."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from srg_lab.graph import Graph, iter_bits, triangle_count
from srg_lab.params import SrgParams


@dataclass(frozen=True)
class SpectralReport:
    matrix_identity: bool
    trace_a: int
    trace_a2: int
    trace_a3: int
    expected_trace_a2: int
    expected_trace_a3: int

    @property
    def ok(self) -> bool:
        return (self.matrix_identity and self.trace_a == 0
                and self.trace_a2 == self.expected_trace_a2
                and self.trace_a3 == self.expected_trace_a3)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "matrix_identity": self.matrix_identity,
                "trace_a": self.trace_a, "trace_a2": self.trace_a2, "trace_a3": self.trace_a3,
                "expected_trace_a2": self.expected_trace_a2,
                "expected_trace_a3": self.expected_trace_a3}


def adjacency_matrix(g: Graph) -> np.ndarray:
    matrix = np.zeros((g.n, g.n), dtype=np.int64)
    for v in range(g.n):
        for u in iter_bits(g.adj[v]):
            matrix[v, u] = 1
    return matrix


def check_adjacency_identity(g: Graph, p: SrgParams) -> SpectralReport:
    if g.n != p.n:
        raise ValueError(f"order mismatch: graph {g.n}, params {p.n}")
    a = adjacency_matrix(g)
    eye = np.eye(g.n, dtype=np.int64)
    ones = np.ones((g.n, g.n), dtype=np.int64)
    a2 = a @ a
    rhs = p.k * eye + p.lam * a + p.mu * (ones - eye - a)
    return SpectralReport(matrix_identity=bool(np.array_equal(a2, rhs)),
                          trace_a=int(np.trace(a)),
                          trace_a2=int(np.trace(a2)),
                          trace_a3=int(np.trace(a2 @ a)),
                          expected_trace_a2=p.n * p.k,
                          expected_trace_a3=6 * triangle_count(g))

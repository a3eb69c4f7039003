# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Iterator, List, Optional, Sequence, Tuple

from srg_lab.config import VERTEX_LIMIT

if TYPE_CHECKING:
    import networkx as nx

    from srg_lab.params import SrgParams


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Errors
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class GraphInputError(ValueError):
    pass


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Utils
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Types
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; row v of `adj` is the bit set of neighbors of v."""
    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= VERTEX_LIMIT:
            raise GraphInputError(f"vertex count out of range: {self.n}")
        if len(self.adj) != self.n:
            raise GraphInputError(f"adjacency rows mismatch: {len(self.adj)} != {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphInputError(f"row {v} references vertices beyond {self.n - 1}")
            if row >> v & 1:
                raise GraphInputError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphInputError(f"asymmetric pair: ({v}, {u})")

    # ────────────────────────────────────────────────────────────
    # Constructors
    # ────────────────────────────────────────────────────────────

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"invalid edge: ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    def to_networkx(self) -> nx.Graph:
        import networkx as nx
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    # ────────────────────────────────────────────────────────────
    # Queries
    # ────────────────────────────────────────────────────────────

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    # ────────────────────────────────────────────────────────────
    # Transformations
    # ────────────────────────────────────────────────────────────

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Vertex v of self becomes vertex perm[v] of the result."""
        if sorted(perm) != list(range(self.n)):
            raise GraphInputError("relabeling is not a permutation")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def with_edge(self, u: int, v: int, present: bool = True) -> Graph:
        _check_vertex(self, u)
        _check_vertex(self, v)
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        rows = list(self.adj)
        if present:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        else:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))


@dataclass(frozen=True)
class PairViolation:
    u: int
    v: int
    observed: int
    expected: int
    adjacent: bool = True


@dataclass(frozen=True)
class DegreeViolation:
    v: int
    observed: int


@dataclass(frozen=True)
class SrgReport:
    is_srg: bool
    violating_pair: Optional[PairViolation] = None
    degree_violation: Optional[DegreeViolation] = None
    identity_violation: bool = False
    mu_checked_pairs: int = 0

    @property
    def reason(self) -> str:
        if self.is_srg:
            return "ok"
        if self.identity_violation:
            return "identity_violation"
        if self.degree_violation is not None:
            return "degree_violation"
        if self.violating_pair is not None and self.violating_pair.adjacent:
            return "lambda_violation"
        return "mu_violation"

    def to_dict(self) -> dict:
        return {
            "is_srg": self.is_srg,
            "reason": self.reason,
            "violating_pair": None if self.violating_pair is None else {
                "u": self.violating_pair.u, "v": self.violating_pair.v,
                "observed": self.violating_pair.observed,
                "expected": self.violating_pair.expected,
                "adjacent": self.violating_pair.adjacent},
            "degree_violation": None if self.degree_violation is None else {
                "v": self.degree_violation.v, "observed": self.degree_violation.observed},
            "mu_checked_pairs": self.mu_checked_pairs,
        }


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Predicates
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphInputError(f"vertex out of range: {v} (n: {g.n})")


def common_neighbors(g: Graph, u: int, v: int) -> int:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphInputError(f"pair needs distinct vertices: ({u}, {v})")
    return (g.adj[u] & g.adj[v]).bit_count()


def is_strongly_regular(g: Graph, p: SrgParams) -> SrgReport:
    from srg_lab.params import check_identity

    if p.n != g.n:
        raise GraphInputError(f"order mismatch: graph {g.n}, params {p.n}")
    if not check_identity(p):
        return SrgReport(is_srg=False, identity_violation=True)

    for v in range(g.n):
        if g.degree(v) != p.k:
            return SrgReport(is_srg=False, degree_violation=DegreeViolation(v, g.degree(v)))

    mu_checked = 0
    for u, v in combinations(range(g.n), 2):
        observed = (g.adj[u] & g.adj[v]).bit_count()
        if g.has_edge(u, v):
            if observed != p.lam:
                return SrgReport(is_srg=False,
                                 violating_pair=PairViolation(u, v, observed, p.lam))
        else:
            mu_checked += 1
            if observed != p.mu:
                return SrgReport(is_srg=False,
                                 violating_pair=PairViolation(u, v, observed, p.mu, adjacent=False),
                                 mu_checked_pairs=mu_checked)
    return SrgReport(is_srg=True, mu_checked_pairs=mu_checked)


def triangle_count(g: Graph) -> int:
    total = 0
    for u in range(g.n):
        for v in iter_bits(g.adj[u] >> (u + 1) << (u + 1)):
            total += (g.adj[u] & g.adj[v] >> (v + 1) << (v + 1)).bit_count()
    return total


def triangles_through(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    row = g.adj[v]
    return sum((g.adj[u] & row).bit_count() for u in iter_bits(row)) // 2


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    vertices = sorted(set(s))
    for v in vertices:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(vertices)}
    mask = to_mask(vertices)
    rows = []
    for v in vertices:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(vertices), tuple(rows))


def neighborhood_is_matching(g: Graph, v: int) -> bool:
    """True when the neighborhood of v induces a perfect matching (λ = 1 locally)."""
    _check_vertex(g, v)
    local = induced_subgraph(g, iter_bits(g.adj[v]))
    return all(local.degree(u) == 1 for u in range(local.n))

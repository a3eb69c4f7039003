# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

from srg_lab.graph import Graph, iter_bits
from srg_lab.params import SrgParams


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Partial Graph
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class PartialGraph:
    """Tri-state pair matrix with incremental common-neighbor counters.

    `adj[u]` holds decided edges, `non[u]` decided non-edges (the diagonal included);
    a pair in neither is undecided. `common[u][v]` counts committed common neighbors,
    i.e. w with both (u, w) and (v, w) decided edges. Every decision is recorded on a
    trail so that `undo_to` can restore an earlier state.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.full = (1 << n) - 1
        self.adj: List[int] = [0] * n
        self.non: List[int] = [1 << v for v in range(n)]
        self.common: List[List[int]] = [[0] * n for _ in range(n)]
        self._trail: List[Tuple[int, int, bool]] = []

    @classmethod
    def from_graph(cls, g: Graph) -> PartialGraph:
        pg = cls(g.n)
        for u, v in g.edges():
            pg.set_edge(u, v)
            for x in (u, v):
                if pg.adj[x].bit_count() > self.p.k:
                    raise _Fail("degree_exceeded", x, x)
        for u in range(g.n):
            for v in iter_bits(pg.undecided(u)):
                pg.set_non_edge(u, v)
        return pg

    # ────────────────────────────────────────────────────────────
    # Queries
    # ────────────────────────────────────────────────────────────

    def undecided(self, u: int) -> int:
        return self.full & ~(self.adj[u] | self.non[u])

    def is_decided(self, u: int, v: int) -> bool:
        return bool((self.adj[u] | self.non[u]) >> v & 1)

    def is_complete(self) -> bool:
        return all(not self.undecided(u) for u in range(self.n))

    def first_undecided(self) -> Optional[Tuple[int, int]]:
        for u in range(self.n):
            rest = self.undecided(u) >> (u + 1) << (u + 1)
            if rest:
                return u, (rest & -rest).bit_length() - 1
        return None

    def mark(self) -> int:
        return len(self._trail)

    def to_graph(self) -> Graph:
        return Graph(self.n, tuple(self.adj))

    # ────────────────────────────────────────────────────────────
    # Decisions
    # ────────────────────────────────────────────────────────────

    def set_edge(self, u: int, v: int) -> None:
        common = self.common
        for w in iter_bits(self.adj[u]):
            common[v][w] += 1
            common[w][v] += 1
        for w in iter_bits(self.adj[v]):
            common[u][w] += 1
            common[w][u] += 1
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self._trail.append((u, v, True))

    def set_non_edge(self, u: int, v: int) -> None:
        self.non[u] |= 1 << v
        self.non[v] |= 1 << u
        self._trail.append((u, v, False))

    def undo_to(self, mark: int) -> None:
        common = self.common
        while len(self._trail) > mark:
            u, v, is_edge = self._trail.pop()
            if not is_edge:
                self.non[u] &= ~(1 << v)
                self.non[v] &= ~(1 << u)
                continue
            self.adj[u] &= ~(1 << v)
            self.adj[v] &= ~(1 << u)
            for w in iter_bits(self.adj[u]):
                common[v][w] -= 1
                common[w][v] -= 1
            for w in iter_bits(self.adj[v]):
                common[u][w] -= 1
                common[w][u] -= 1


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Propagation
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass(frozen=True)
class Consistent:
    forced: int = 0

    @property
    def ok(self) -> bool:
        return True


@dataclass(frozen=True)
class Contradiction:
    reason: str
    u: int
    v: int

    @property
    def ok(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"{self.reason} ({self.u}, {self.v})"


Propagation = Union[Consistent, Contradiction]


class _Fail(Exception):

    def __init__(self, reason: str, u: int, v: int) -> None:
        super().__init__(reason)
        self.contradiction = Contradiction(reason, u, v)


class _Propagator:

    def __init__(self, pg: PartialGraph, p: SrgParams) -> None:
        self.pg = pg
        self.p = p
        self.queue: List[int] = []
        self.queued = 0
        self.forced = 0

    def push(self, v: int) -> None:
        if not self.queued >> v & 1:
            self.queued |= 1 << v
            self.queue.append(v)

    def decide(self, u: int, v: int, edge: bool) -> None:
        pg = self.pg
        if edge:
            if pg.non[u] >> v & 1:
                raise _Fail("forced_edge_on_non_edge", u, v)
            if pg.adj[u] >> v & 1:
                return
            pg.set_edge(u, v)
        else:
            if pg.adj[u] >> v & 1:
                raise _Fail("forced_non_edge_on_edge", u, v)
            if pg.non[u] >> v & 1:
                return
            pg.set_non_edge(u, v)
        self.forced += 1
        self.push(u)
        self.push(v)

    def run(self) -> None:
        self._bounds()
        while self.queue:
            u = self.queue.pop()
            self.queued &= ~(1 << u)
            self._degree_rule(u)
            for v in range(self.pg.n):
                if v != u:
                    self._pair_rule(u, v)

    def _bounds(self) -> None:
        """Degree bounds of every queued vertex, ahead of any pair rule."""
        pg, k = self.pg, self.p.k
        for v in self.queue:
            if pg.adj[v].bit_count() > k:
                raise _Fail("degree_exceeded", v, v)
        for v in self.queue:
            if pg.adj[v].bit_count() + pg.undecided(v).bit_count() < k:
                raise _Fail("degree_unreachable", v, v)

    def _degree_rule(self, u: int) -> None:
        pg, k = self.pg, self.p.k
        d = pg.adj[u].bit_count()
        open_ = pg.undecided(u)
        slots = open_.bit_count()
        if d > k:
            raise _Fail("degree_exceeded", u, u)
        if d + slots < k:
            raise _Fail("degree_unreachable", u, u)
        if open_ and d == k:
            for v in iter_bits(open_):
                self.decide(u, v, False)
        elif open_ and d + slots == k:
            for v in iter_bits(open_):
                self.decide(u, v, True)

    def _pair_rule(self, u: int, v: int) -> None:
        pg, p = self.pg, self.p
        committed = pg.common[u][v]
        reach_u = pg.adj[u] | pg.undecided(u)
        reach_v = pg.adj[v] | pg.undecided(v)
        possible_mask = reach_u & reach_v
        possible = possible_mask.bit_count()

        if pg.adj[u] >> v & 1:
            self._exact(u, v, p.lam, "lambda", committed, possible, possible_mask)
        elif pg.non[u] >> v & 1:
            self._exact(u, v, p.mu, "mu", committed, possible, possible_mask)
        else:
            need_non = committed > p.lam or possible < p.lam
            need_edge = committed > p.mu or possible < p.mu
            if need_non and need_edge:
                raise _Fail("pair_unsatisfiable", u, v)
            if need_non:
                self.decide(u, v, False)
            elif need_edge:
                self.decide(u, v, True)

    def _exact(self, u: int, v: int, target: int, name: str,
               committed: int, possible: int, possible_mask: int) -> None:
        pg = self.pg
        if committed > target:
            raise _Fail(f"{name}_exceeded", u, v)
        if possible < target:
            raise _Fail(f"{name}_unreachable", u, v)
        if possible == committed:
            return
        shared = pg.adj[u] & pg.adj[v]
        if committed == target:
            # no further shared neighbor: close the half-open sides
            for w in iter_bits(possible_mask & ~shared):
                if pg.adj[u] >> w & 1:
                    self.decide(v, w, False)
                elif pg.adj[v] >> w & 1:
                    self.decide(u, w, False)
        elif possible == target:
            for w in iter_bits(possible_mask & ~shared):
                self.decide(u, w, True)
                self.decide(v, w, True)


def propagate(pg: PartialGraph, p: SrgParams,
              touched: Optional[Iterable[int]] = None) -> Propagation:
    """Run the degree and pair rules to a fixpoint; decisions stay on the trail."""
    propagator = _Propagator(pg, p)
    for v in (range(pg.n) if touched is None else touched):
        propagator.push(v)
    try:
        propagator.run()
    except _Fail as exc:
        return exc.contradiction
    return Consistent(forced=propagator.forced)

# -*- coding: utf-8 -*-
from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

import psutil
from tqdm import tqdm

from srg_lab.config import SEARCH_VERTEX_GUARD
from srg_lab.graph import is_strongly_regular
from srg_lab.logger import get_logger
from srg_lab.params import IdentityViolationError, SrgParams, check_identity
from srg_lab_apps.search.canonical import canonical_form
from srg_lab_apps.search.partial import PartialGraph, propagate

logger = get_logger("search")

Decision = Tuple[int, int, bool]


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Configs
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def default_jobs() -> int:
    return psutil.cpu_count(logical=False) or 1


@dataclass
class SearchConfig:
    jobs: int = 1
    split_depth: int = 6
    progress: bool = False
    guard: int = SEARCH_VERTEX_GUARD


class SearchGuardError(ValueError):
    pass


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Outcome
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass
class SearchOutcome:
    params: SrgParams
    seeded: bool
    solutions: List[str] = field(default_factory=list)
    nodes_explored: int = 0
    max_depth: int = 0
    wall_time_ms: float = 0.0

    def to_dict(self) -> Dict[str, object]:
        p = self.params
        return {"params": {"n": p.n, "k": p.k, "lambda": p.lam, "mu": p.mu},
                "seeded": self.seeded,
                "solutions": self.solutions,
                "nodes_explored": self.nodes_explored,
                "max_depth": self.max_depth,
                "wall_time_ms": self.wall_time_ms}


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Seeding
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _commit_row(pg: PartialGraph, u: int, neighbors: Sequence[int]) -> None:
    wanted = set(neighbors)
    for v in range(pg.n):
        if v == u or pg.is_decided(u, v):
            continue
        if v in wanted:
            pg.set_edge(u, v)
        else:
            pg.set_non_edge(u, v)


def seed_cells(p: SrgParams) -> Optional[List[List[int]]]:
    """Vertex cells of the seeded labeling, or None when the seed cannot fit in n."""
    n, k, lam = p.n, p.k, p.lam
    if k == 0 or n < 2:
        return [cell for cell in ([0], list(range(1, n))) if cell]
    if 2 * k - lam - 1 > n - 1:
        return None
    if lam == 1 and k >= 2:
        if 3 * k - 4 > n - 1:
            return None
        bounds = [0, 1, 2, 3, k + 1, 2 * k - 1, 3 * k - 3, n]
    else:
        bounds = [0, 1, 2, lam + 2, k + 1, 2 * k - lam, n]
    cells = [list(range(lo, hi)) for lo, hi in zip(bounds, bounds[1:])]
    return [cell for cell in cells if cell]


def apply_seed(pg: PartialGraph, p: SrgParams) -> None:
    """Commit N(0), N(1) and, for lambda = 1, N(2) of the anchor labeling.

    N(0) = {1..k}; N(1) meets N(0) in {2..lambda+1} and leaves it in
    {k+1..2k-lambda-1}; with lambda = 1 vertex 2 closes the anchor triangle and
    N(2) \\ {0, 1} = {2k-1..3k-4}.
    """
    n, k, lam = p.n, p.k, p.lam
    _commit_row(pg, 0, range(1, k + 1))
    if k == 0 or n < 2:
        return
    _commit_row(pg, 1, [0, *range(2, lam + 2), *range(k + 1, 2 * k - lam)])
    if lam == 1 and k >= 2:
        _commit_row(pg, 2, [0, 1, *range(2 * k - 1, 3 * k - 3)])


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Symmetry Breaking
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _swaps(cells: Sequence[Sequence[int]]) -> List[int]:
    return [cell[i] for cell in cells for i in range(len(cell) - 1)]


def _compare(pg: PartialGraph, a: int, positions: Sequence[int], column: bool) -> int:
    """1 prune, -1 keep, 0 undecided, 2 tie over `positions`."""
    for i in positions:
        x, y = (i, a) if column else (a, i)
        x2, y2 = (i, a + 1) if column else (a + 1, i)
        if not (pg.is_decided(x, y) and pg.is_decided(x2, y2)):
            return 0
        bit = pg.adj[x] >> y & 1
        bit2 = pg.adj[x2] >> y2 & 1
        if bit != bit2:
            return 1 if bit else -1
    return 2


def lex_pruned(pg: PartialGraph, swaps: Sequence[int]) -> bool:
    """True when swapping some a, a+1 of one cell provably gives a smaller upper triangle."""
    for a in swaps:
        verdict = _compare(pg, a, range(a), True)
        if verdict == 2:
            verdict = _compare(pg, a, range(a + 2, pg.n), False)
        if verdict == 1:
            return True
    return False


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Search
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class _Searcher:

    def __init__(self, p: SrgParams, seeded: bool) -> None:
        self.p = p
        self.pg = PartialGraph(p.n)
        self.nodes = 0
        self.max_depth = 0
        self.solutions: Set[str] = set()
        self.frontier: List[Tuple[Decision, ...]] = []

        cells = seed_cells(p) if seeded else [list(range(p.n))]
        self.feasible = cells is not None
        self.swaps = _swaps(cells or [])
        if self.feasible and seeded:
            apply_seed(self.pg, p)
        if self.feasible:
            self.feasible = propagate(self.pg, p).ok and not lex_pruned(self.pg, self.swaps)

    def replay(self, prefix: Sequence[Decision]) -> bool:
        for u, v, edge in prefix:
            if not self._decide(u, v, edge):
                return False
        return True

    def _decide(self, u: int, v: int, edge: bool) -> bool:
        if self.pg.is_decided(u, v):
            return bool(self.pg.adj[u] >> v & 1) == edge
        if edge:
            self.pg.set_edge(u, v)
        else:
            self.pg.set_non_edge(u, v)
        if not propagate(self.pg, self.p, (u, v)).ok:
            return False
        return not lex_pruned(self.pg, self.swaps)

    def _leaf(self) -> None:
        g = self.pg.to_graph()
        if is_strongly_regular(g, self.p).is_srg:
            self.solutions.add(canonical_form(g))

    def search(self, path: Tuple[Decision, ...] = (), stop_depth: Optional[int] = None) -> None:
        self.nodes += 1
        self.max_depth = max(self.max_depth, len(path))
        pair = self.pg.first_undecided()
        if pair is None:
            self._leaf()
            return
        if stop_depth is not None and len(path) >= stop_depth:
            self.frontier.append(path)
            return

        u, v = pair
        for edge in (True, False):
            mark = self.pg.mark()
            if self._decide(u, v, edge):
                self.search(path + ((u, v, edge),), stop_depth)
            self.pg.undo_to(mark)


def _search_subtree(p_tuple: Tuple[int, int, int, int], seeded: bool,
                    prefix: Tuple[Decision, ...]) -> Tuple[List[str], int, int]:
    searcher = _Searcher(SrgParams(*p_tuple), seeded)
    if not searcher.feasible or not searcher.replay(prefix):
        return [], 0, len(prefix)
    searcher.search(prefix)
    return sorted(searcher.solutions), searcher.nodes, searcher.max_depth


def _check_search_params(p: SrgParams, guard: int) -> None:
    if p.n > guard:
        raise SearchGuardError(f"refused: n={p.n} exceeds the search vertex guard "
                               f"(SEARCH_VERTEX_GUARD = {guard})")
    if not check_identity(p):
        raise IdentityViolationError(f"parameter identity fails for {p}")


def exhaustive_search(p: SrgParams, seeded: bool = False,
                      config: Optional[SearchConfig] = None) -> SearchOutcome:
    config = config or SearchConfig()
    _check_search_params(p, config.guard)
    start = time.perf_counter()
    outcome = SearchOutcome(params=p, seeded=seeded)

    searcher = _Searcher(p, seeded)
    if not searcher.feasible:
        logger.info(f"root refuted | params: {p} | seeded: {seeded}")
    elif config.jobs <= 1:
        searcher.search()
    else:
        searcher.search(stop_depth=config.split_depth)
        logger.debug(f"frontier | params: {p} | subproblems: {len(searcher.frontier)}")
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [pool.submit(_search_subtree, p.as_tuple(), seeded, prefix)
                       for prefix in searcher.frontier]
            done = as_completed(futures)
            if config.progress:
                done = tqdm(done, total=len(futures), desc=str(p), file=sys.stderr)
            for future in done:
                solutions, nodes, depth = future.result()
                searcher.solutions.update(solutions)
                searcher.nodes += nodes
                searcher.max_depth = max(searcher.max_depth, depth)

    outcome.solutions = sorted(searcher.solutions)
    outcome.nodes_explored = searcher.nodes
    outcome.max_depth = searcher.max_depth
    outcome.wall_time_ms = round((time.perf_counter() - start) * 1000, 3)
    logger.info(f"search done | params: {p} | seeded: {seeded} | "
                f"solutions: {len(outcome.solutions)} | nodes: {outcome.nodes_explored} | "
                f"elapsed_ms: {outcome.wall_time_ms}")
    return outcome

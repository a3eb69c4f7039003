# -*- coding: utf-8 -*-
"""Canonical graph6 form by color refinement and individualization.

Every leaf of the individualization tree is a discrete ordered partition; the graph is
relabeled by cell position and the lexicographically smallest graph6 string wins.
"""
from __future__ import annotations

from typing import List, Optional

from srg_lab.graph import Graph, to_mask
from srg_lab.graph6 import to_graph6

Partition = List[List[int]]


def refine(g: Graph, cells: Partition) -> Partition:
    """Split cells by neighbor counts per cell until the partition is equitable."""
    while True:
        masks = [to_mask(cell) for cell in cells]
        refined: Partition = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple((g.adj[v] & mask).bit_count() for mask in masks)
                groups.setdefault(signature, []).append(v)
            refined.extend(groups[key] for key in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _are_twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)


def _search(g: Graph, cells: Partition, best: List[Optional[str]]) -> None:
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        position = [0] * g.n
        for i, (v,) in enumerate(cells):
            position[v] = i
        candidate = to_graph6(g.relabel(position))
        if best[0] is None or candidate < best[0]:
            best[0] = candidate
        return

    tried: List[int] = []
    for v in cells[target]:
        # swapping twins is an automorphism, so their subtrees give the same leaves
        if any(_are_twins(g, v, t) for t in tried):
            continue
        tried.append(v)
        rest = [u for u in cells[target] if u != v]
        split = cells[:target] + [[v], rest] + cells[target + 1:]
        _search(g, refine(g, split), best)


def canonical_form(g: Graph) -> str:
    if g.n == 0:
        return to_graph6(g)
    best: List[Optional[str]] = [None]
    _search(g, refine(g, [list(range(g.n))]), best)
    return best[0]

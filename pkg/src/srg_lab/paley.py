# -*- coding: utf-8 -*-
from __future__ import annotations

from typing import FrozenSet, List, Tuple

from sympy import isprime

from srg_lab.graph import Graph

# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# GF(9) = GF(3)[x] / (x^2 + 1)
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

# Element index e = a + 3b encodes a + b·x.
_GF9_MUL: Tuple[Tuple[int, ...], ...] = (
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 2, 3, 4, 5, 6, 7, 8),
    (0, 2, 1, 6, 8, 7, 3, 5, 4),
    (0, 3, 6, 2, 5, 8, 1, 4, 7),
    (0, 4, 8, 5, 6, 1, 7, 2, 3),
    (0, 5, 7, 8, 1, 3, 4, 6, 2),
    (0, 6, 3, 1, 7, 4, 2, 8, 5),
    (0, 7, 5, 4, 2, 6, 8, 3, 1),
    (0, 8, 4, 7, 3, 2, 5, 1, 6),
)


def _gf9_sub(u: int, v: int) -> int:
    return (u % 3 - v % 3) % 3 + 3 * ((u // 3 - v // 3) % 3)


class PaleyOrderError(ValueError):
    pass


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Constructions
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _nonzero_squares(q: int) -> FrozenSet[int]:
    if q == 9:
        return frozenset(_GF9_MUL[e][e] for e in range(1, 9))
    return frozenset(x * x % q for x in range(1, q))


def paley_graph(q: int) -> Graph:
    if q != 9 and not (isprime(q) and q % 4 == 1):
        raise PaleyOrderError(f"paley order must be a prime = 1 mod 4 or 9: {q}")

    squares = _nonzero_squares(q)
    edges: List[Tuple[int, int]] = []
    for u in range(q):
        for v in range(u + 1, q):
            diff = _gf9_sub(u, v) if q == 9 else (u - v) % q
            if diff in squares:
                edges.append((u, v))
    return Graph.from_edges(q, edges)

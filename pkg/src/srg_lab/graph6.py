# -*- coding: utf-8 -*-
"""graph6 short form (n <= 62): header chr(n + 63), then the upper triangle read
column by column in 6-bit big-endian chunks, each offset by 63."""
from __future__ import annotations

from typing import Iterator, List, Tuple

from srg_lab.config import VERTEX_LIMIT
from srg_lab.graph import Graph

# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Constants
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

_OFFSET = 63
_HEADER = ">>graph6<<"


class Graph6Error(ValueError):

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset
        self.reason = message


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Utils
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _pair_order(n: int) -> Iterator[Tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def _byte_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Codec
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def to_graph6(g: Graph) -> str:
    if g.n > VERTEX_LIMIT:
        raise ValueError(f"graph6 short form needs n <= {VERTEX_LIMIT}: {g.n}")
    bits: List[int] = [1 if g.adj[i] >> j & 1 else 0 for i, j in _pair_order(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(g.n + _OFFSET)]
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start:start + 6]:
            value = value << 1 | bit
        chars.append(chr(value + _OFFSET))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(_HEADER):
        base = len(_HEADER)
        line = line[base:]
    if not line:
        raise Graph6Error("empty graph6 line", base)

    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-printable or out-of-range byte {ord(ch):#04x}", base + pos)

    n = ord(line[0]) - _OFFSET
    if n > VERTEX_LIMIT:
        raise Graph6Error(f"length header {n} outside short form (n <= {VERTEX_LIMIT})", base)

    expected = _byte_length(n)
    body = line[1:]
    if len(body) < expected:
        raise Graph6Error(f"truncated body: {len(body)} of {expected} bytes", base + len(line))
    if len(body) > expected:
        raise Graph6Error("trailing garbage", base + 1 + expected)

    total_bits = n * (n - 1) // 2
    rows = [0] * n
    pairs = _pair_order(n)
    for index, ch in enumerate(body):
        value = ord(ch) - _OFFSET
        for shift in range(5, -1, -1):
            bit_index = index * 6 + (5 - shift)
            bit = value >> shift & 1
            if bit_index >= total_bits:
                if bit:
                    raise Graph6Error("non-zero padding bits", base + 1 + index)
                continue
            i, j = next(pairs)
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))

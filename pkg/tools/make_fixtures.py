# -*- coding: utf-8 -*-
from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import networkx as nx

from srg_lab.graph import Graph, is_strongly_regular
from srg_lab.graph6 import to_graph6
from srg_lab.paley import paley_graph
from srg_lab.params import SrgParams


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Fixtures
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

_FIXTURES = [
    ("k3", Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), SrgParams(3, 2, 1, 2)),
    ("paley5", paley_graph(5), SrgParams(5, 2, 0, 1)),
    ("paley9", paley_graph(9), SrgParams(9, 4, 1, 2)),
    ("paley13", paley_graph(13), SrgParams(13, 6, 2, 3)),
    ("petersen", Graph.from_networkx(nx.petersen_graph()), SrgParams(10, 3, 0, 1)),
]


def _file_name(name: str, p: SrgParams) -> str:
    return f"{name}-srg-{p.n}-{p.k}-{p.lam}-{p.mu}.g6"


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Main
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def make_fixtures(out_dir: str = "fixtures") -> None:
    Path(out_dir).mkdir(parents=True, exist_ok=True)
    for name, g, p in _FIXTURES:
        report = is_strongly_regular(g, p)
        if not report.is_srg:
            raise SystemExit(f"fixture {name} is not {p}: {report.reason}")
        path = Path(out_dir) / _file_name(name, p)
        path.write_text(to_graph6(g) + "\n")
        print(f"Fixture written: {path}")


if __name__ == "__main__":
    make_fixtures(sys.argv[1] if len(sys.argv) > 1 else "fixtures")

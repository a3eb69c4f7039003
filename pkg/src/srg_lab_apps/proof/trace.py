# -*- coding: utf-8 -*-
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from srg_lab.params import SrgParams
from srg_lab_apps.proof.partition import CycleStructure

Path_ = Tuple[Tuple[int, int], ...]


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Certificates
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class CertificateKind(str, Enum):
    EDGE_IN_TWO_TRIANGLES = "edge_in_two_triangles"
    VERTEX_EXCEEDS_THREE_TRIANGLES = "vertex_exceeds_three_triangles"
    MU_VIOLATION_WITH_WITNESSES = "mu_violation_with_witnesses"
    W_ADJACENCY_QUOTA_VIOLATION = "w_adjacency_quota_violation"
    NO_APEX_AVAILABLE = "no_apex_available"


@dataclass(frozen=True)
class Certificate:
    """Witness layout per kind:

    edge_in_two_triangles           {"edge": [x, y], "apexes": [z1, z2]}
    vertex_exceeds_three_triangles  {"vertex": v, "triangles": [[x, y], ...]}
    mu_violation_with_witnesses     {"pair": [u, v], "common": [x, y, z]}
    w_adjacency_quota_violation     {"vertex": w, "class": "A", "neighbors": [x, y, z]}
    no_apex_available               {"edge": [x, y], "exclusions": [{"apex": w, "certificate": {...}}]}
    """
    kind: CertificateKind
    witnesses: Dict[str, Any]

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "witnesses": self.witnesses}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Certificate:
        return cls(CertificateKind(data["kind"]), data["witnesses"])


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Trace
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass
class TraceNode:
    label: str
    children: List[TraceNode] = field(default_factory=list)
    certificate: Optional[Certificate] = None
    completion: bool = False

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class TraceLeaf:
    path: Path_
    certificate: Certificate

    def to_dict(self) -> Dict[str, Any]:
        return {"path": [list(step) for step in self.path],
                "certificate": self.certificate.to_dict()}


@dataclass(frozen=True)
class LemmaRecord:
    """`basis` is "counting" for identities derived from the parameters, "checked" when
    recomputed on the case structures."""
    name: str
    statement: str
    holds: bool
    basis: str = "counting"

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "statement": self.statement, "holds": self.holds,
                "basis": self.basis}


@dataclass
class CaseTrace:
    structure: CycleStructure
    edges: Tuple[Tuple[int, int], ...]
    root: TraceNode
    nodes: int = 0
    leaves: List[TraceLeaf] = field(default_factory=list)
    completions: List[Path_] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {"structure": list(self.structure.lengths),
                "label": self.structure.label,
                "edges": [list(edge) for edge in self.edges],
                "nodes": self.nodes,
                "leaves": [leaf.to_dict() for leaf in self.leaves],
                "completions": [[list(step) for step in path] for path in self.completions]}


@dataclass
class TraceStats:
    nodes_explored: int = 0
    leaves: int = 0
    surviving_completions: int = 0
    elapsed_ms: float = 0.0


@dataclass
class ProofTrace:
    params: SrgParams
    labeling: Dict[str, List[int]]
    root: TraceNode
    cases: List[CaseTrace] = field(default_factory=list)
    lemmas: List[LemmaRecord] = field(default_factory=list)
    counterexamples: List[str] = field(default_factory=list)
    stats: TraceStats = field(default_factory=TraceStats)

    @property
    def surviving_completions(self) -> int:
        return sum(len(case.completions) for case in self.cases)

    def certificate_counts(self) -> Dict[str, int]:
        counts: Counter = Counter()
        for case in self.cases:
            for leaf in case.leaves:
                counts[leaf.certificate.kind.value] += 1
        return dict(sorted(counts.items()))

    def refresh_stats(self, elapsed_ms: float) -> None:
        self.stats = TraceStats(nodes_explored=sum(case.nodes for case in self.cases),
                                leaves=sum(len(case.leaves) for case in self.cases),
                                surviving_completions=self.surviving_completions,
                                elapsed_ms=elapsed_ms)

    def to_dict(self) -> Dict[str, Any]:
        p = self.params
        return {
            "params": {"n": p.n, "k": p.k, "lambda": p.lam, "mu": p.mu},
            "labeling": self.labeling,
            "lemmas": [lemma.to_dict() for lemma in self.lemmas],
            "cases": [case.to_dict() for case in self.cases],
            "surviving_completions": self.surviving_completions,
            "counterexamples": self.counterexamples,
            "stats": {"nodes_explored": self.stats.nodes_explored,
                      "leaves": self.stats.leaves,
                      "surviving_completions": self.stats.surviving_completions,
                      "elapsed_ms": self.stats.elapsed_ms,
                      "certificates": self.certificate_counts()},
        }

    def write_json(self, path: str) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=1) + "\n")

# -*- coding: utf-8 -*-
"""Independent re-validation of a serialized proof trace.

Only graph-core primitives are used: every leaf's partial structure is rebuilt from the
labeling, the case edges and the leaf path, and each certificate is checked against it.
The leaf set is also checked for exhaustiveness over apex candidates, and the trace as a
whole must carry srg(19,6,1,2), a labeling of the right class sizes and one case per
admissible cycle structure.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from srg_lab.graph import Graph, GraphInputError
from srg_lab_apps.proof.partition import admissible_cycle_structures

Step = Tuple[int, int]

PROVED_PARAMS = {"n": 19, "k": 6, "lambda": 1, "mu": 2}


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Report
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass(frozen=True)
class ReplayFailure:
    case: str
    leaf_index: Optional[int]
    path: Tuple[Step, ...]
    reason: str

    def to_dict(self) -> Dict[str, Any]:
        return {"case": self.case, "leaf": self.leaf_index,
                "path": [list(step) for step in self.path], "reason": self.reason}


@dataclass
class ReplayReport:
    checked_leaves: int = 0
    surviving_completions: int = 0
    failures: List[ReplayFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.surviving_completions == 0

    def to_dict(self) -> Dict[str, Any]:
        return {"ok": self.ok, "checked_leaves": self.checked_leaves,
                "surviving_completions": self.surviving_completions,
                "failures": [failure.to_dict() for failure in self.failures]}


class _Broken(Exception):
    pass


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Case Context
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class _Case:

    def __init__(self, params: Dict[str, int], labeling: Dict[str, List[int]],
                 edges: List[Tuple[int, int]]) -> None:
        self.n = params["n"]
        self.k = params["k"]
        self.lam = params["lambda"]
        self.mu = params["mu"]
        self.classes = {name: set(labeling[name]) for name in ("A", "B", "C")}
        self.W = list(labeling["W"])
        self.edges = edges

        a, b, c = labeling["anchor"]
        self._base = [(a, b), (a, c), (b, c)]
        for anchor, name in ((a, "A"), (b, "B"), (c, "C")):
            self._base.extend((anchor, x) for x in labeling[name])
        self._base.extend(edges)

    def graph(self, path: Sequence[Step]) -> Graph:
        pairs = set()
        for u, v in self._base:
            pairs.add((min(u, v), max(u, v)))
        for index, w in path:
            if not 0 <= index < len(self.edges):
                raise _Broken(f"edge index out of range: {index}")
            if w not in self.W:
                raise _Broken(f"apex outside W: {w}")
            for x in self.edges[index]:
                pairs.add((min(w, x), max(w, x)))
        return Graph.from_edges(self.n, pairs)

    # ────────────────────────────────────────────────────────────
    # Certificates
    # ────────────────────────────────────────────────────────────

    def check(self, path: Sequence[Step], certificate: Dict[str, Any]) -> None:
        kind = certificate.get("kind")
        witnesses = certificate.get("witnesses", {})
        if kind == "no_apex_available":
            self._check_no_apex(path, witnesses)
            return
        g = self.graph(path)
        checker = {
            "edge_in_two_triangles": self._check_edge,
            "vertex_exceeds_three_triangles": self._check_vertex,
            "mu_violation_with_witnesses": self._check_mu,
            "w_adjacency_quota_violation": self._check_quota,
        }.get(kind)
        if checker is None:
            raise _Broken(f"unknown certificate kind: {kind}")
        checker(g, witnesses)

    @staticmethod
    def _distinct(values: Sequence[int], what: str) -> None:
        if len(set(values)) != len(values):
            raise _Broken(f"repeated {what}: {list(values)}")

    def _check_edge(self, g: Graph, witnesses: Dict[str, Any]) -> None:
        u, v = witnesses["edge"]
        apexes = witnesses["apexes"]
        if not g.has_edge(u, v):
            raise _Broken(f"not an edge: ({u}, {v})")
        self._distinct(apexes, "apexes")
        for z in apexes:
            if not (g.has_edge(z, u) and g.has_edge(z, v)):
                raise _Broken(f"apex {z} does not close a triangle on ({u}, {v})")
        if len(apexes) <= self.lam:
            raise _Broken(f"edge ({u}, {v}) lies in only {len(apexes)} triangles")

    def _check_vertex(self, g: Graph, witnesses: Dict[str, Any]) -> None:
        w = witnesses["vertex"]
        bases = [tuple(sorted(base)) for base in witnesses["triangles"]]
        self._distinct(bases, "triangles")
        for x, y in bases:
            if not (g.has_edge(x, y) and g.has_edge(w, x) and g.has_edge(w, y)):
                raise _Broken(f"({w}, {x}, {y}) is not a triangle")
        if len(bases) <= self.k * self.lam // 2:
            raise _Broken(f"vertex {w} lies in only {len(bases)} triangles")

    def _check_mu(self, g: Graph, witnesses: Dict[str, Any]) -> None:
        u, v = witnesses["pair"]
        common = witnesses["common"]
        # W is independent in every completion
        if u == v or u not in self.W or v not in self.W:
            raise _Broken(f"pair is not a known non-edge: ({u}, {v})")
        self._distinct(common, "common neighbors")
        for z in common:
            if not (g.has_edge(z, u) and g.has_edge(z, v)):
                raise _Broken(f"{z} is not a common neighbor of ({u}, {v})")
        if len(common) <= self.mu:
            raise _Broken(f"pair ({u}, {v}) has only {len(common)} common neighbors")

    def _check_quota(self, g: Graph, witnesses: Dict[str, Any]) -> None:
        w = witnesses["vertex"]
        members = self.classes.get(witnesses["class"])
        neighbors = witnesses["neighbors"]
        if w not in self.W or members is None:
            raise _Broken(f"quota witness outside W or classes: {w}")
        self._distinct(neighbors, "neighbors")
        for x in neighbors:
            if x not in members or not g.has_edge(w, x):
                raise _Broken(f"{x} is not a {witnesses['class']} neighbor of {w}")
        if len(neighbors) <= self.mu:
            raise _Broken(f"vertex {w} has only {len(neighbors)} {witnesses['class']} neighbors")

    def _check_no_apex(self, path: Sequence[Step], witnesses: Dict[str, Any]) -> None:
        index = len(path)
        if index >= len(self.edges) or list(witnesses["edge"]) != list(self.edges[index]):
            raise _Broken(f"exhausted edge does not follow the path: {witnesses['edge']}")
        apexes = [item["apex"] for item in witnesses["exclusions"]]
        if sorted(apexes) != sorted(self.W):
            raise _Broken(f"exclusions do not cover W: {apexes}")
        for item in witnesses["exclusions"]:
            self.check(tuple(path) + ((index, item["apex"]),), item["certificate"])


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Exhaustiveness
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _uncovered(case: _Case,
               terminals: Set[Tuple[Step, ...]],
               exhausted: Set[Tuple[Step, ...]]) -> List[Tuple[Step, ...]]:
    """Branch points whose apex candidates are not all accounted for."""
    inner: Set[Tuple[Step, ...]] = {()}
    reached: Set[Tuple[Step, ...]] = set()
    for path in terminals | exhausted:
        for cut in range(len(path)):
            inner.add(path[:cut])
            reached.add(path[:cut + 1])
    inner |= exhausted
    covered = reached | terminals

    missing = []
    for prefix in sorted(inner, key=lambda path: (len(path), path)):
        if prefix in exhausted or len(prefix) == len(case.edges):
            continue
        used = sorted({w for _, w in prefix})
        unused = [w for w in case.W if w not in used]
        index = len(prefix)
        for w in used + unused[:1]:
            if prefix + ((index, w),) not in covered:
                missing.append(prefix + ((index, w),))
    return missing


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Replay
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _as_path(raw: Sequence[Sequence[int]]) -> Tuple[Step, ...]:
    return tuple((int(index), int(w)) for index, w in raw)


def _structure_of(case: _Case) -> Optional[str]:
    """Cycle lengths of the case edges, or None when they are not bijection cycles."""
    try:
        g = Graph.from_edges(case.n, case.edges)
    except GraphInputError:
        return None
    abc = set().union(*case.classes.values())
    if any(g.degree(v) != (2 if v in abc else 0) for v in range(case.n)):
        return None
    for u, v in case.edges:
        if not any(u in members for members in case.classes.values()):
            return None
        if any(u in members and v in members for members in case.classes.values()):
            return None

    seen: Set[int] = set()
    lengths = []
    for start in sorted(abc):
        if start in seen:
            continue
        stack, size = [start], 0
        seen.add(start)
        while stack:
            v = stack.pop()
            size += 1
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        lengths.append(size)
    return "+".join(str(length) for length in sorted(lengths))


def _case_label(case_data: Dict[str, Any]) -> str:
    return case_data.get("label") or "+".join(str(x) for x in case_data["structure"])


def _header_failures(data: Dict[str, Any]) -> List[ReplayFailure]:
    """Trace-level problems; params or labeling failures make the cases meaningless."""
    params, labeling = data["params"], data["labeling"]
    if dict(params) != PROVED_PARAMS:
        return [ReplayFailure("trace", None, (), f"params are not srg(19,6,1,2): {params}")]

    side = params["k"] - 2
    sizes = {"anchor": 3, "A": side, "B": side, "C": side, "W": params["n"] - 3 - 3 * side}
    for name, size in sizes.items():
        if len(labeling[name]) != size:
            return [ReplayFailure("trace", None, (),
                                  f"class {name} has {len(labeling[name])} vertices, "
                                  f"expected {size}")]
    vertices = [v for name in sizes for v in labeling[name]]
    if sorted(vertices) != list(range(params["n"])):
        return [ReplayFailure("trace", None, (),
                              "labeling is not a partition of the vertex set")]

    expected = [s.label for s in admissible_cycle_structures(side)]
    labels = [_case_label(case_data) for case_data in data["cases"]]
    failures = [ReplayFailure(label, None, (), "case missing from trace")
                for label in expected if label not in labels]
    failures.extend(ReplayFailure(label, None, (), "case is not an admissible structure")
                    for label in sorted(set(labels)) if label not in expected)
    failures.extend(ReplayFailure(label, None, (), "case appears more than once")
                    for label in sorted(set(labels)) if labels.count(label) > 1)
    return failures


def replay_trace(data: Dict[str, Any]) -> ReplayReport:
    report = ReplayReport()
    header = _header_failures(data)
    report.failures.extend(header)
    if any(failure.case == "trace" for failure in header):
        return report

    for case_data in data["cases"]:
        label = _case_label(case_data)
        edges = [tuple(edge) for edge in case_data["edges"]]
        case = _Case(data["params"], data["labeling"], edges)

        if _structure_of(case) != label:
            report.failures.append(ReplayFailure(label, None, (),
                                                 f"edges do not form structure {label}"))
            continue

        completions = {_as_path(path) for path in case_data.get("completions", [])}
        report.surviving_completions += len(completions)

        terminals: Set[Tuple[Step, ...]] = set(completions)
        exhausted: Set[Tuple[Step, ...]] = set()
        for leaf_index, leaf in enumerate(case_data["leaves"]):
            path = _as_path(leaf["path"])
            report.checked_leaves += 1
            expected = list(range(len(path)))
            if [index for index, _ in path] != expected:
                report.failures.append(ReplayFailure(label, leaf_index, path,
                                                     "path does not follow edge order"))
                continue
            try:
                case.check(path, leaf["certificate"])
            except (_Broken, GraphInputError, KeyError, TypeError, ValueError) as exc:
                report.failures.append(ReplayFailure(label, leaf_index, path, str(exc)))
                continue
            if leaf["certificate"]["kind"] == "no_apex_available":
                exhausted.add(path)
            else:
                terminals.add(path)

        for path in _uncovered(case, terminals, exhausted):
            report.failures.append(ReplayFailure(label, None, path, "branch not covered"))
    return report


def replay_file(path: str) -> ReplayReport:
    return replay_trace(json.loads(Path(path).read_text()))

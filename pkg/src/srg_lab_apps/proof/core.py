# -*- coding: utf-8 -*-
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from srg_lab.graph import Graph, iter_bits, to_mask
from srg_lab.graph6 import to_graph6
from srg_lab.logger import get_logger
from srg_lab.params import (
    InfeasibleParamsError,
    SrgParams,
    expected_counts,
    triangle_bookkeeping,
)
from srg_lab_apps.proof.partition import (
    CycleStructure,
    abc_bijections,
    admissible_cycle_structures,
    bijection_edge_cycles,
    build_triangle_partition,
    raw_cycle_structures,
)
from srg_lab_apps.proof.trace import (
    CaseTrace,
    Certificate,
    CertificateKind,
    LemmaRecord,
    ProofTrace,
    TraceLeaf,
    TraceNode,
)

logger = get_logger("proof")

SRG19 = SrgParams(19, 6, 1, 2)

Edge = Tuple[int, int]
Step = Tuple[int, int]


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Configs
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass
class ProofConfig:
    jobs: int = 1


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Layout
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass(frozen=True)
class ClassLayout:
    """Canonical labels: anchor 0, 1, 2 then the classes A, B, C, W in consecutive blocks."""
    n: int
    anchor: Tuple[int, int, int]
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    C: Tuple[int, ...]
    W: Tuple[int, ...]

    @classmethod
    def for_params(cls, p: SrgParams) -> ClassLayout:
        partition = expected_counts(p).partition
        if partition is None:
            raise InfeasibleParamsError(f"canonical layout needs lambda = 1: {p}")
        side, rest = partition[0], partition[3]
        if rest < 0:
            raise InfeasibleParamsError(f"negative W class: {p}")
        start = 3
        blocks = []
        for size in (side, side, side, rest):
            blocks.append(tuple(range(start, start + size)))
            start += size
        return cls(p.n, (0, 1, 2), *blocks)

    @property
    def class_masks(self) -> Dict[str, int]:
        return {"A": to_mask(self.A), "B": to_mask(self.B), "C": to_mask(self.C)}

    def to_dict(self) -> Dict[str, List[int]]:
        return {"anchor": list(self.anchor), "A": list(self.A), "B": list(self.B),
                "C": list(self.C), "W": list(self.W)}

    def base_edges(self) -> List[Edge]:
        a, b, c = self.anchor
        edges = [(a, b), (a, c), (b, c)]
        for anchor, members in ((a, self.A), (b, self.B), (c, self.C)):
            edges.extend((anchor, x) for x in members)
        return edges


def cycle_edges(layout: ClassLayout, structure: CycleStructure) -> Tuple[Edge, ...]:
    """Bijection edges of `structure` in walk order a_i b_i c_i a_(i+1) ..."""
    if sum(structure.lengths) != 3 * len(layout.A):
        raise ValueError(f"structure {structure.label} does not cover classes of size "
                         f"{len(layout.A)}")
    edges: List[Edge] = []
    offset = 0
    for length in structure.lengths:
        m = length // 3
        walk: List[int] = []
        for i in range(offset, offset + m):
            walk.extend((layout.A[i], layout.B[i], layout.C[i]))
        edges.extend((walk[j], walk[(j + 1) % len(walk)]) for j in range(len(walk)))
        offset += m
    return tuple(edges)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Apex Search
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class ApexSearch:
    """Depth-first assignment of a W apex to each cycle edge.

    Edges are taken in walk order; candidates are the apexes already in use plus the
    lowest unused one (W labels are interchangeable). Chords inside a class are never
    fixed, so every certificate holds on any completion of the partial structure.
    """

    def __init__(self, p: SrgParams, layout: ClassLayout, edges: Sequence[Edge]) -> None:
        self._p = p
        self._layout = layout
        self._edges = tuple(edges)
        self._apex_cap = p.k * p.lam // 2
        self._masks = layout.class_masks
        self._w_mask = to_mask(layout.W)

        rows = [0] * p.n
        for u, v in layout.base_edges() + list(self._edges):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._base = tuple(rows)

        self.nodes = 0
        self.leaves: List[TraceLeaf] = []
        self.completions: List[Tuple[Step, ...]] = []

    # ────────────────────────────────────────────────────────────
    # Structure
    # ────────────────────────────────────────────────────────────

    def rows_for(self, path: Sequence[Step]) -> List[int]:
        rows = list(self._base)
        for index, w in path:
            for x in self._edges[index]:
                rows[w] |= 1 << x
                rows[x] |= 1 << w
        return rows

    def partial_graph(self, path: Sequence[Step]) -> Graph:
        return Graph(self._p.n, tuple(self.rows_for(path)))

    # ────────────────────────────────────────────────────────────
    # Refutation
    # ────────────────────────────────────────────────────────────

    def refute(self, path: Sequence[Step]) -> Optional[Certificate]:
        """First violated constraint after the last step of `path`, or None."""
        p = self._p
        rows = self.rows_for(path)
        _, w = path[-1]

        # W pairs first: a mu witness outranks the local rules
        for other in iter_bits(self._w_mask & ~(1 << w)):
            common = rows[w] & rows[other]
            if common.bit_count() > p.mu:
                return Certificate(CertificateKind.MU_VIOLATION_WITH_WITNESSES,
                                   {"pair": sorted((w, other)), "common": list(iter_bits(common))})

        bases = [list(self._edges[i]) for i, apex in path if apex == w]
        if len(bases) > self._apex_cap:
            return Certificate(CertificateKind.VERTEX_EXCEEDS_THREE_TRIANGLES,
                               {"vertex": w, "triangles": bases})

        for u in range(p.n):
            for v in iter_bits(rows[u] >> (u + 1) << (u + 1)):
                common = rows[u] & rows[v]
                if common.bit_count() > p.lam:
                    return Certificate(CertificateKind.EDGE_IN_TWO_TRIANGLES,
                                       {"edge": [u, v], "apexes": list(iter_bits(common))})

        for name, mask in self._masks.items():
            hits = rows[w] & mask
            if hits.bit_count() > p.mu:
                return Certificate(CertificateKind.W_ADJACENCY_QUOTA_VIOLATION,
                                   {"vertex": w, "class": name, "neighbors": list(iter_bits(hits))})

        return None

    def _candidates(self, path: Sequence[Step]) -> List[int]:
        used = sorted({w for _, w in path})
        unused = [w for w in self._layout.W if w not in used]
        return used + unused[:1]

    # ────────────────────────────────────────────────────────────
    # Search
    # ────────────────────────────────────────────────────────────

    def run(self, root: TraceNode) -> None:
        self._descend((), root)

    def _descend(self, path: Tuple[Step, ...], node: TraceNode) -> None:
        self.nodes += 1
        index = len(path)
        if index == len(self._edges):
            node.completion = True
            self.completions.append(path)
            return

        x, y = self._edges[index]
        refuted: List[Tuple[int, Certificate]] = []
        viable: List[int] = []
        for w in self._candidates(path):
            certificate = self.refute(path + ((index, w),))
            if certificate is None:
                viable.append(w)
            else:
                refuted.append((w, certificate))

        if not viable:
            node.certificate = self._exhausted(path, index)
            self.leaves.append(TraceLeaf(path, node.certificate))
            return

        for w, certificate in refuted:
            self.nodes += 1
            node.children.append(TraceNode(f"edge {x}-{y} apex {w}", certificate=certificate))
            self.leaves.append(TraceLeaf(path + ((index, w),), certificate))
        for w in viable:
            child = TraceNode(f"edge {x}-{y} apex {w}")
            node.children.append(child)
            self._descend(path + ((index, w),), child)

    def _exhausted(self, path: Tuple[Step, ...], index: int) -> Certificate:
        exclusions = []
        for w in self._layout.W:
            certificate = self.refute(path + ((index, w),))
            if certificate is None:
                raise RuntimeError(f"apex symmetry broken | edge: {index} | apex: {w}")
            exclusions.append({"apex": w, "certificate": certificate.to_dict()})
        return Certificate(CertificateKind.NO_APEX_AVAILABLE,
                           {"edge": list(self._edges[index]), "exclusions": exclusions})


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Cases
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def exhaust_apex_assignments(structure: CycleStructure, params: SrgParams = SRG19) -> CaseTrace:
    layout = ClassLayout.for_params(params)
    edges = cycle_edges(layout, structure)
    root = TraceNode(f"structure {structure.label}")

    demand = len(layout.W) * (params.k * params.lam // 2)
    if demand == 0:
        # nothing to place: the cycle edges close their triangles inside A∪B∪C
        root.completion = True
        return CaseTrace(structure, edges, root, nodes=1, completions=[()])
    if demand != len(edges):
        raise ValueError(f"apex demand {demand} does not match {len(edges)} cycle edges")

    search = ApexSearch(params, layout, edges)
    search.run(root)
    logger.info(f"case done | structure: {structure.label} | "
                f"nodes: {search.nodes} | leaves: {len(search.leaves)} | "
                f"completions: {len(search.completions)}")
    return CaseTrace(structure, edges, root,
                     nodes=search.nodes,
                     leaves=search.leaves,
                     completions=search.completions)


def _exhaust_case(label: str, params: Tuple[int, int, int, int]) -> CaseTrace:
    return exhaust_apex_assignments(CycleStructure.from_label(label), SrgParams(*params))


def _case_layout_holds(p: SrgParams, layout: ClassLayout, structure: CycleStructure) -> bool:
    """Partition and bijections recomputed on the case's partial structure."""
    edges = layout.base_edges() + list(cycle_edges(layout, structure))
    g = Graph.from_edges(p.n, edges)
    try:
        part = build_triangle_partition(g, *layout.anchor)
        maps = abc_bijections(g, part)
    except ValueError:
        return False
    return (part.sizes == expected_counts(p).partition
            and maps.cycle_structure() == structure
            and bijection_edge_cycles(g, part) == structure)


def _lemma_records(p: SrgParams) -> List[LemmaRecord]:
    side = p.k - p.lam - 1
    rest = p.n - 3 - 3 * side
    counts = expected_counts(p)
    book = triangle_bookkeeping(p)
    raw = raw_cycle_structures(side)
    admissible = admissible_cycle_structures(side)
    layout = ClassLayout.for_params(p)
    dropped = [s.label for s in raw if s not in admissible]
    return [
        LemmaRecord("partition",
                    f"|A| = |B| = |C| = k - lambda - 1 = {side}, "
                    f"|W| = {p.n} - 3 - 3 * {side} = {rest}",
                    counts.partition == (side, side, side, rest) and rest >= 0),
        LemmaRecord("triangle_bookkeeping",
                    f"{book.total} - {book.through_anchor} - {book.w_apex} = {book.remaining}",
                    book.remaining == 0),
        LemmaRecord("w_independent",
                    f"w misses the anchor, so each anchor's mu = {p.mu} common neighbors "
                    f"with w lie in its class: {p.k} - 3 * {p.mu} = {p.k - 3 * p.mu} "
                    f"neighbors left for W",
                    p.k - 3 * p.mu == 0),
        LemmaRecord("class_matching",
                    f"the lambda = {p.lam} triangle on a-x closes inside A: "
                    f"G[A] is a perfect matching on {side} vertices",
                    p.lam == 1 and side % 2 == 0),
        LemmaRecord("bijections",
                    f"x in A misses b, so its mu = {p.mu} common neighbors with b are a "
                    f"plus {p.mu} - 1 = {p.mu - 1} vertex of B",
                    p.mu - 1 == 1),
        LemmaRecord("cycle_structures",
                    f"raw: {', '.join(s.label for s in raw)}; A∪B∪C holds {book.remaining} "
                    f"triangles, ruling out 3-cycles and the 9-cycle that forces one: "
                    f"{', '.join(dropped)}; "
                    f"admissible: {', '.join(s.label for s in admissible)}",
                    book.remaining == 0 and len(admissible) > 0),
        LemmaRecord("case_layouts",
                    f"partition and bijections recomputed for "
                    f"{', '.join(s.label for s in admissible)}",
                    all(_case_layout_holds(p, layout, s) for s in admissible),
                    basis="checked"),
    ]


def _counterexample(p: SrgParams, case: CaseTrace, path: Sequence[Tuple[int, int]]) -> str:
    layout = ClassLayout.for_params(p)
    edges = layout.base_edges() + list(case.edges)
    for index, w in path:
        x, y = case.edges[index]
        edges.extend(((w, x), (w, y)))
    return to_graph6(Graph.from_edges(p.n, set(tuple(sorted(e)) for e in edges)))


def prove_nonexistence_19(config: Optional[ProofConfig] = None) -> ProofTrace:
    config = config or ProofConfig()
    p = SRG19
    start = time.perf_counter()

    layout = ClassLayout.for_params(p)
    structures = admissible_cycle_structures(len(layout.A))
    lemmas = _lemma_records(p)
    logger.debug(f"lemmas | {' | '.join(f'{r.name}: {r.holds}' for r in lemmas)}")

    labels = [s.label for s in structures]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=min(config.jobs, len(labels))) as pool:
            futures = [pool.submit(_exhaust_case, label, p.as_tuple()) for label in labels]
            cases = [future.result() for future in futures]
    else:
        cases = [exhaust_apex_assignments(s, p) for s in structures]

    root = TraceNode(str(p), children=[case.root for case in cases])
    trace = ProofTrace(params=p, labeling=layout.to_dict(), root=root,
                       cases=cases, lemmas=lemmas)
    trace.counterexamples = [_counterexample(p, case, path)
                             for case in cases for path in case.completions]
    trace.refresh_stats(round((time.perf_counter() - start) * 1000, 3))

    if trace.surviving_completions:
        logger.warning(f"surviving completions: {trace.surviving_completions}")
    logger.info(f"proof done | cases: {len(cases)} | leaves: {trace.stats.leaves} | "
                f"surviving: {trace.surviving_completions} | "
                f"elapsed_ms: {trace.stats.elapsed_ms}")
    return trace

# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from srg_lab.graph import (
    Graph,
    GraphInputError,
    induced_subgraph,
    iter_bits,
    to_mask,
    triangle_count,
)
from srg_lab.params import (
    InfeasibleParamsError,
    SrgParams,
    anchor_triangle_count,
    expected_counts,
)

# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Constants
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

_SUPPORTED_CLASS_SIZES = (2, 4)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Errors
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class PartitionOverlapError(ValueError):

    def __init__(self, overlap: Tuple[int, ...]) -> None:
        super().__init__(f"anchor classes overlap (graph is not locally lambda=1): {list(overlap)}")
        self.overlap = overlap


@dataclass(frozen=True)
class BijectionViolation:
    """`vertex` and the non-adjacent anchor share `common` (expected exactly μ)."""
    vertex: int
    anchor: int
    common: Tuple[int, ...]


class BijectionViolationError(ValueError):

    def __init__(self, violation: BijectionViolation) -> None:
        super().__init__(f"cross-class map is not a bijection | "
                         f"pair: ({violation.vertex}, {violation.anchor}) | "
                         f"common: {list(violation.common)}")
        self.violation = violation


class UnsupportedClassSizeError(ValueError):
    pass


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Types
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass(frozen=True)
class TrianglePartition:
    a: int
    b: int
    c: int
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    C: Tuple[int, ...]
    W: Tuple[int, ...]

    @property
    def sizes(self) -> Tuple[int, int, int, int]:
        return len(self.A), len(self.B), len(self.C), len(self.W)

    @property
    def abc(self) -> Tuple[int, ...]:
        return tuple(sorted(self.A + self.B + self.C))

    def class_of(self, v: int) -> str:
        for name in ("A", "B", "C", "W"):
            if v in getattr(self, name):
                return name
        return "anchor"


@dataclass(frozen=True)
class LemmaReport:
    cardinalities: bool
    w_independent: bool
    w_quotas: bool
    in_class_matching: bool
    abc_triangle_bookkeeping: bool
    abc_cubic: bool
    abc_triangles: int
    predicted_abc_triangles: Optional[int]

    @property
    def abc_triangle_free(self) -> bool:
        return self.abc_triangles == 0

    @property
    def all_pass(self) -> bool:
        return all((self.cardinalities, self.w_independent, self.w_quotas,
                    self.in_class_matching, self.abc_triangle_bookkeeping,
                    self.abc_cubic))

    def to_dict(self) -> Dict[str, object]:
        return {"L1": self.cardinalities, "L2": self.w_independent, "L3": self.w_quotas,
                "L4": self.in_class_matching, "L5": self.abc_triangle_bookkeeping,
                "L6": self.abc_cubic, "abc_triangles": self.abc_triangles,
                "predicted_abc_triangles": self.predicted_abc_triangles}


@dataclass(frozen=True)
class CycleStructure:
    lengths: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", tuple(sorted(self.lengths)))
        if any(length <= 0 or length % 3 for length in self.lengths):
            raise ValueError(f"cycle lengths must be positive multiples of 3: {self.lengths}")

    @property
    def label(self) -> str:
        return "+".join(str(length) for length in self.lengths)

    @classmethod
    def from_label(cls, label: str) -> CycleStructure:
        return cls(tuple(int(part) for part in label.split("+")))


@dataclass(frozen=True)
class AbcBijections:
    """Cross-class maps as index maps into the sorted classes A, B, C."""
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    C: Tuple[int, ...]
    f_ab: Tuple[int, ...]
    f_bc: Tuple[int, ...]
    f_ca: Tuple[int, ...]

    def composition(self) -> Tuple[int, ...]:
        """f_CA ∘ f_BC ∘ f_AB as a permutation of A's indices."""
        return tuple(self.f_ca[self.f_bc[self.f_ab[i]]] for i in range(len(self.A)))

    def cycle_structure(self) -> CycleStructure:
        perm = self.composition()
        seen = [False] * len(perm)
        lengths: List[int] = []
        for start in range(len(perm)):
            if seen[start]:
                continue
            length, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = perm[i]
                length += 1
            lengths.append(3 * length)
        return CycleStructure(tuple(lengths))


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Partition
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def build_triangle_partition(g: Graph, a: int, b: int, c: int) -> TrianglePartition:
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise GraphInputError(f"anchor is not a triangle: ({a}, {b}, {c})")

    anchors = to_mask((a, b, c))
    class_a = g.adj[a] & ~anchors
    class_b = g.adj[b] & ~anchors
    class_c = g.adj[c] & ~anchors
    overlap = (class_a & class_b) | (class_b & class_c) | (class_a & class_c)
    if overlap:
        raise PartitionOverlapError(tuple(iter_bits(overlap)))

    full = (1 << g.n) - 1
    rest = full & ~(anchors | class_a | class_b | class_c)
    return TrianglePartition(a, b, c,
                             A=tuple(iter_bits(class_a)),
                             B=tuple(iter_bits(class_b)),
                             C=tuple(iter_bits(class_c)),
                             W=tuple(iter_bits(rest)))


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Lemmas
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _predicted_abc_triangles(part: TrianglePartition, p: SrgParams) -> Optional[int]:
    try:
        counts = expected_counts(p)
        through_anchor = anchor_triangle_count(p)
    except InfeasibleParamsError:
        return None
    return counts.triangles - through_anchor - len(part.W) * counts.triangles_per_vertex


def check_partition_lemmas(g: Graph, part: TrianglePartition, p: SrgParams) -> LemmaReport:
    classes = {"A": to_mask(part.A), "B": to_mask(part.B), "C": to_mask(part.C)}
    w_mask = to_mask(part.W)
    abc_mask = classes["A"] | classes["B"] | classes["C"]

    # L1
    try:
        cardinalities = expected_counts(p).partition == part.sizes
    except InfeasibleParamsError:
        cardinalities = False

    # L2
    w_independent = all(not g.adj[w] & w_mask for w in part.W)

    # L3
    w_quotas = all((g.adj[w] & mask).bit_count() == p.mu
                   for w in part.W for mask in classes.values())

    # L4
    in_class_matching = all((g.adj[v] & classes[name]).bit_count() == 1
                            for name, mask in classes.items() for v in iter_bits(mask))

    # L5
    abc_triangles = triangle_count(induced_subgraph(g, part.abc))
    predicted = _predicted_abc_triangles(part, p)
    bookkeeping = predicted is not None and predicted == abc_triangles

    # L6
    abc_cubic = all((g.adj[v] & abc_mask).bit_count() == 3 for v in iter_bits(abc_mask))

    return LemmaReport(cardinalities=cardinalities,
                       w_independent=w_independent,
                       w_quotas=w_quotas,
                       in_class_matching=in_class_matching,
                       abc_triangle_bookkeeping=bookkeeping,
                       abc_cubic=abc_cubic,
                       abc_triangles=abc_triangles,
                       predicted_abc_triangles=predicted)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Bijections
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _cross_map(g: Graph,
               source: Tuple[int, ...],
               target: Tuple[int, ...],
               source_anchor: int,
               target_anchor: int) -> Tuple[int, ...]:
    target_mask = to_mask(target)
    index = {v: i for i, v in enumerate(target)}
    image: List[int] = []
    for x in source:
        hits = g.adj[x] & target_mask
        if hits.bit_count() != 1:
            # x and the target anchor are non-adjacent; their common neighbors are
            # the source anchor plus every hit, so anything but one hit breaks mu
            common = tuple(iter_bits(g.adj[x] & g.adj[target_anchor]))
            raise BijectionViolationError(BijectionViolation(x, target_anchor, common))
        image.append(index[next(iter_bits(hits))])

    seen: Dict[int, int] = {}
    for i, j in enumerate(image):
        if j in seen:
            y = target[j]
            common = tuple(iter_bits(g.adj[y] & g.adj[source_anchor]))
            raise BijectionViolationError(BijectionViolation(y, source_anchor, common))
        seen[j] = i
    return tuple(image)


def abc_bijections(g: Graph, part: TrianglePartition) -> AbcBijections:
    return AbcBijections(A=part.A, B=part.B, C=part.C,
                         f_ab=_cross_map(g, part.A, part.B, part.a, part.b),
                         f_bc=_cross_map(g, part.B, part.C, part.b, part.c),
                         f_ca=_cross_map(g, part.C, part.A, part.c, part.a))


def bijection_edge_cycles(g: Graph, part: TrianglePartition) -> CycleStructure:
    """Cycle lengths of the graph formed by cross-class edges only."""
    masks = {v: 0 for v in part.abc}
    for name, other in (("A", "B"), ("B", "C"), ("C", "A")):
        target = to_mask(getattr(part, other))
        for x in getattr(part, name):
            for y in iter_bits(g.adj[x] & target):
                masks[x] |= 1 << y
                masks[y] |= 1 << x

    seen = 0
    lengths: List[int] = []
    for start in part.abc:
        if seen >> start & 1:
            continue
        component, frontier = 0, 1 << start
        while frontier:
            component |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= masks[v]
            frontier = nxt & ~component
        seen |= component
        lengths.append(component.bit_count())
    return CycleStructure(tuple(lengths))


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Cycle Structures
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def _partitions(total: int, largest: int) -> List[Tuple[int, ...]]:
    if total == 0:
        return [()]
    result: List[Tuple[int, ...]] = []
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            result.append(rest + (part,))
    return result


def raw_cycle_structures(class_size: int) -> List[CycleStructure]:
    if class_size < 1:
        raise UnsupportedClassSizeError(f"class size must be positive: {class_size}")
    raw = {tuple(3 * part for part in sorted(parts))
           for parts in _partitions(class_size, class_size)}
    return [CycleStructure(lengths) for lengths in sorted(raw)]


def admissible_cycle_structures(class_size: int) -> List[CycleStructure]:
    if class_size not in _SUPPORTED_CLASS_SIZES:
        raise UnsupportedClassSizeError(
            f"class size out of scope: {class_size} (supported: {list(_SUPPORTED_CLASS_SIZES)})")

    raw = raw_cycle_structures(class_size)
    # a 9-cycle leaves 3 vertices that can only close into a triangle
    for structure in raw:
        if 9 in structure.lengths and 3 not in structure.lengths:
            raise AssertionError(f"9-cycle without a complementary 3-cycle: {structure.label}")
    return [s for s in raw if 3 not in s.lengths and 9 not in s.lengths]


# -*- coding: utf-8 -*-
from __future__ import annotations

from srg_lab_apps.proof.core import (
    SRG19,
    ApexSearch,
    ClassLayout,
    ProofConfig,
    cycle_edges,
    exhaust_apex_assignments,
    prove_nonexistence_19,
)
from srg_lab_apps.proof.partition import (
    AbcBijections,
    BijectionViolation,
    BijectionViolationError,
    CycleStructure,
    LemmaReport,
    PartitionOverlapError,
    TrianglePartition,
    UnsupportedClassSizeError,
    abc_bijections,
    admissible_cycle_structures,
    bijection_edge_cycles,
    build_triangle_partition,
    check_partition_lemmas,
    raw_cycle_structures,
)
from srg_lab_apps.proof.replay import ReplayFailure, ReplayReport, replay_file, replay_trace
from srg_lab_apps.proof.trace import (
    CaseTrace,
    Certificate,
    CertificateKind,
    LemmaRecord,
    ProofTrace,
    TraceLeaf,
    TraceNode,
)

__all__ = [
    "SRG19",
    "AbcBijections",
    "ApexSearch",
    "BijectionViolation",
    "BijectionViolationError",
    "CaseTrace",
    "Certificate",
    "CertificateKind",
    "ClassLayout",
    "CycleStructure",
    "LemmaRecord",
    "LemmaReport",
    "PartitionOverlapError",
    "ProofConfig",
    "ProofTrace",
    "ReplayFailure",
    "ReplayReport",
    "TraceLeaf",
    "TraceNode",
    "TrianglePartition",
    "UnsupportedClassSizeError",
    "abc_bijections",
    "admissible_cycle_structures",
    "bijection_edge_cycles",
    "build_triangle_partition",
    "check_partition_lemmas",
    "cycle_edges",
    "exhaust_apex_assignments",
    "prove_nonexistence_19",
    "raw_cycle_structures",
    "replay_file",
    "replay_trace",
]

# -*- coding: utf-8 -*-
"""srg-lab: strongly regular graph verification, feasibility and search toolkit."""
from __future__ import annotations

__version__ = "0.1.0"

from srg_lab.app import App, AppConfig, AppStatistics, LoggingFlags, StageStatistics, UsageError
from srg_lab.graph import (
    Graph,
    GraphInputError,
    SrgReport,
    common_neighbors,
    induced_subgraph,
    is_strongly_regular,
    neighborhood_is_matching,
    triangle_count,
    triangles_through,
)
from srg_lab.graph6 import Graph6Error, parse_graph6, to_graph6
from srg_lab.logger import LoggerConfig, LoggingLevel
from srg_lab.paley import PaleyOrderError, paley_graph
from srg_lab.params import (
    FeasibilityReason,
    FeasibilityVerdict,
    InfeasibleParamsError,
    SrgParams,
    Spectrum,
    anchor_triangle_count,
    check_identity,
    enumerate_family,
    expected_counts,
    family_order,
    integrality_test,
    spectrum_of,
    triangle_bookkeeping,
)
from srg_lab.states import AppState

__all__ = [
    "App",
    "AppConfig",
    "AppState",
    "AppStatistics",
    "FeasibilityReason",
    "FeasibilityVerdict",
    "Graph",
    "Graph6Error",
    "GraphInputError",
    "InfeasibleParamsError",
    "LoggerConfig",
    "LoggingFlags",
    "LoggingLevel",
    "PaleyOrderError",
    "SrgParams",
    "SrgReport",
    "Spectrum",
    "StageStatistics",
    "UsageError",
    "anchor_triangle_count",
    "check_identity",
    "common_neighbors",
    "enumerate_family",
    "expected_counts",
    "family_order",
    "induced_subgraph",
    "integrality_test",
    "is_strongly_regular",
    "neighborhood_is_matching",
    "paley_graph",
    "parse_graph6",
    "spectrum_of",
    "to_graph6",
    "triangle_bookkeeping",
    "triangle_count",
    "triangles_through",
]

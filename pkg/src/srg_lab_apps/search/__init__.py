# -*- coding: utf-8 -*-
from __future__ import annotations

from srg_lab_apps.search.canonical import canonical_form, refine
from srg_lab_apps.search.core import (
    SearchConfig,
    SearchGuardError,
    SearchOutcome,
    apply_seed,
    default_jobs,
    exhaustive_search,
    lex_pruned,
    seed_cells,
)
from srg_lab_apps.search.partial import Consistent, Contradiction, PartialGraph, propagate

__all__ = [
    "Consistent",
    "Contradiction",
    "PartialGraph",
    "SearchConfig",
    "SearchGuardError",
    "SearchOutcome",
    "apply_seed",
    "canonical_form",
    "default_jobs",
    "exhaustive_search",
    "lex_pruned",
    "propagate",
    "refine",
    "seed_cells",
]

# -*- coding: utf-8 -*-
from __future__ import annotations

import os


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Limits
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

VERTEX_LIMIT = 62
SEARCH_VERTEX_GUARD = 19
KMAX_LIMIT = 10 ** 6
PALEY_ORDERS = (5, 9, 13)


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Exit Codes
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Environment
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

COLOR_ENV = "SRG_LAB_COLOR"
LOG_LEVEL_ENV = "SRG_LAB_LOG_LEVEL"

_COLOR_MODES = ("auto", "always", "never")
_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def get_color_mode() -> str:
    mode = os.environ.get(COLOR_ENV, "auto").strip().lower()
    if mode not in _COLOR_MODES:
        return "auto"
    return mode


def get_log_level() -> str:
    level = os.environ.get(LOG_LEVEL_ENV, "WARNING").strip().upper()
    if level not in _LOG_LEVELS:
        return "WARNING"
    return level

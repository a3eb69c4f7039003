# -*- coding: utf-8 -*-
from __future__ import annotations

from enum import Enum, auto


class AppState(Enum):
    """Command run stages.

    State flow:
        PREPARE → EXECUTE → REPORT → exit code
           ↓          ↓         ↓
              [exception]
                  ↓
          exit 2 (usage / I/O / ValueError), exit 1 (anything else)

    - PREPARE: argument validation, input loading - usage error on failure
    - EXECUTE: the library call (search, proof, verification)
    - REPORT: human-readable or JSON output on stdout
    """
    PREPARE = auto()
    EXECUTE = auto()
    REPORT = auto()

# -*- coding: utf-8 -*-
"""Terminal styling for human-readable output."""
from __future__ import annotations

from typing import TextIO

from srg_lab.config import get_color_mode


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Colors
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

RESET = '\033[0m'
BOLD = '\033[1m'
CYAN = '\033[36m'
YELLOW = '\033[33m'
RED = '\033[31m'
GREEN = '\033[32m'


class Style:

    def __init__(self, stream: TextIO) -> None:
        mode = get_color_mode()
        if mode == "auto":
            self.enabled = bool(getattr(stream, "isatty", lambda: False)())
        else:
            self.enabled = mode == "always"

    def paint(self, text: str, *codes: str) -> str:
        if not self.enabled or not codes:
            return text
        return f"{''.join(codes)}{text}{RESET}"

    # ────────────────────────────────────────────────────────────
    # Markers
    # ────────────────────────────────────────────────────────────

    def head(self, text: str) -> str:
        return self.paint(text, BOLD, CYAN)

    def ok(self, text: str) -> str:
        return self.paint(text, GREEN)

    def warn(self, text: str) -> str:
        return self.paint(text, YELLOW)

    def fail(self, text: str) -> str:
        return self.paint(text, RED)

    def verdict(self, passed: bool) -> str:
        return self.ok("pass") if passed else self.fail("fail")

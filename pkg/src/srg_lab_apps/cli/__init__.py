# -*- coding: utf-8 -*-
from __future__ import annotations

from srg_lab_apps.cli.core import build_parser, main

__all__ = ["build_parser", "main"]

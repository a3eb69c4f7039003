# -*- coding: utf-8 -*-
from __future__ import annotations
__version__ = "0.1.0"

# -*- coding: utf-8 -*-
from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Configs
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class LoggingLevel(Enum):
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR
    CRITICAL = logging.CRITICAL


@dataclass
class LoggerConfig:
    name: str = "srg-lab"
    level: LoggingLevel = LoggingLevel.WARNING
    stream_out: bool = True
    file_out: bool = False
    file_path: Optional[str] = None
    fmt: str = "%(asctime)s | %(levelname)-7s | %(name)s | %(message)s"


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Logger
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

def create_logger(config: Optional[LoggerConfig] = None) -> logging.Logger:
    """Build (or reconfigure) a named logger; every stream handler targets stderr."""
    config = config or LoggerConfig()
    logger = logging.getLogger(config.name)
    logger.setLevel(config.level.value)
    logger.propagate = False

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(config.fmt)
    if config.stream_out:
        stream = logging.StreamHandler(sys.stderr)
        stream.setFormatter(formatter)
        logger.addHandler(stream)
    if config.file_out and config.file_path:
        Path(config.file_path).parent.mkdir(parents=True, exist_ok=True)
        file = logging.FileHandler(config.file_path)
        file.setFormatter(formatter)
        logger.addHandler(file)
    if not logger.handlers:
        logger.addHandler(logging.NullHandler())
    return logger


def get_logger(name: str) -> logging.Logger:
    """Child logger under the project root (inherits root handlers)."""
    return logging.getLogger(f"srg-lab.{name}")

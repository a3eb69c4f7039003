# -*- coding: utf-8 -*-
from __future__ import annotations

import logging
from unittest.mock import patch

from srg_lab.config import get_color_mode, get_log_level
from srg_lab.logger import LoggerConfig, create_logger, get_logger


class TestEnvironment:

    def test_color_mode_default(self):
        """Verify auto is used when SRG_LAB_COLOR is unset."""
        with patch.dict("os.environ", {}, clear=True):
            assert get_color_mode() == "auto"

    def test_color_mode_values(self):
        """Verify valid modes are read case-insensitively."""
        with patch.dict("os.environ", {"SRG_LAB_COLOR": "Never"}):
            assert get_color_mode() == "never"
        with patch.dict("os.environ", {"SRG_LAB_COLOR": "always"}):
            assert get_color_mode() == "always"

    def test_color_mode_invalid_falls_back(self):
        """Verify unknown modes fall back to auto."""
        with patch.dict("os.environ", {"SRG_LAB_COLOR": "rainbow"}):
            assert get_color_mode() == "auto"

    def test_log_level(self):
        """Verify the log level fallback is WARNING."""
        with patch.dict("os.environ", {"SRG_LAB_LOG_LEVEL": "debug"}):
            assert get_log_level() == "DEBUG"
        with patch.dict("os.environ", {"SRG_LAB_LOG_LEVEL": "loud"}):
            assert get_log_level() == "WARNING"


class TestLogger:

    def test_file_output(self, tmp_path):
        """Verify a file handler writes below a created directory."""
        path = tmp_path / "logs" / "srg.log"
        logger = create_logger(LoggerConfig(name="srg-lab-file-test", stream_out=False,
                                            file_out=True, file_path=str(path)))
        logger.warning("case done | structure: 12")
        for handler in logger.handlers:
            handler.flush()
        assert "case done | structure: 12" in path.read_text()

    def test_silent_logger_has_null_handler(self):
        """Verify a logger without outputs still has a handler."""
        logger = create_logger(LoggerConfig(name="srg-lab-silent-test", stream_out=False))
        assert [type(h) for h in logger.handlers] == [logging.NullHandler]

    def test_child_logger_name(self):
        """Verify module loggers live under the project logger."""
        assert get_logger("search").name == "srg-lab.search"

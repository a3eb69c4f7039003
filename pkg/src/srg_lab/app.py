# -*- coding: utf-8 -*-
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from traceback import format_exc
from typing import Generator, Optional

from srg_lab.config import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, get_log_level
from srg_lab.logger import LoggerConfig, LoggingLevel, create_logger
from srg_lab.states import AppState


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Configs
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass
class AppConfig:
    time_decimal: int = 6
    debug: bool = False


@dataclass
class LoggingFlags:
    stages: bool = True
    fallback: bool = True
    traceback: bool = True


@dataclass
class AppLoggerConfig(LoggerConfig):
    name: str = "srg-lab"
    logging_flags: LoggingFlags = field(default_factory=LoggingFlags)


class UsageError(Exception):
    """Raised by app stages for bad input; mapped to exit code 2."""


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# Statistics
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

@dataclass
class StageStatistics:
    elapsed_time: float = 0.0
    done: bool = False


@dataclass
class AppStatistics:
    prepare: StageStatistics = field(default_factory=StageStatistics)
    execute: StageStatistics = field(default_factory=StageStatistics)
    report: StageStatistics = field(default_factory=StageStatistics)
    exception_count: int = 0


# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━
# App
# ━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━

class App:

    def __init__(self,
                 app_id: str,
                 *,
                 app_config: Optional[AppConfig] = None,
                 logger_config: Optional[AppLoggerConfig] = None) -> None:

        # Config
        self._app_conf = app_config or AppConfig()
        self._log_conf = logger_config or AppLoggerConfig(
            level=LoggingLevel[get_log_level()])
        if self._app_conf.debug:
            self._log_conf.level = LoggingLevel.DEBUG

        # Parameters
        self._app_id = app_id
        self._state: Optional[AppState] = None
        self.exit_code = EXIT_OK

        # Logger
        self._logger = create_logger(self._log_conf)

        # Stats
        self._app_statistics = AppStatistics()

    # ────────────────────────────────────────────────────────────
    # Properties
    # ────────────────────────────────────────────────────────────

    @property
    def app_id(self) -> str:
        return self._app_id

    @property
    def logger(self):
        return self._logger

    @property
    def stats(self) -> AppStatistics:
        return self._app_statistics

    @property
    def current_state(self) -> Optional[AppState]:
        return self._state

    # ────────────────────────────────────────────────────────────
    # Helpers
    # ────────────────────────────────────────────────────────────

    @contextmanager
    def _measure_time(self, stage: StageStatistics) -> Generator[None, None, None]:
        start_time = time.perf_counter()
        yield
        stage.elapsed_time = round(time.perf_counter() - start_time,
                                   self._app_conf.time_decimal)

    def _log_fallback(self, location: str, exc: BaseException) -> None:
        if self._log_conf.logging_flags.fallback:
            self._logger.warning(f"loc: {location} | "
                                 f"err: {exc} | "
                                 f"cnt: {self._app_statistics.exception_count}",
                                 stacklevel=3)
        if self._log_conf.logging_flags.traceback:
            self._logger.debug(format_exc(), stacklevel=3)

    def _run_stage(self, state: AppState, stage: StageStatistics, handler) -> None:
        self._state = state
        with self._measure_time(stage):
            handler()
        stage.done = True
        if self._log_conf.logging_flags.stages:
            self._logger.info(f"{state.name.lower()} done | "
                              f"app: {self._app_id} | "
                              f"elapsed: {stage.elapsed_time}")

    # ────────────────────────────────────────────────────────────
    # Run
    # ────────────────────────────────────────────────────────────

    def run(self) -> int:
        stats = self._app_statistics
        try:
            self._run_stage(AppState.PREPARE, stats.prepare, self.on_prepare)
            self._run_stage(AppState.EXECUTE, stats.execute, self.on_execute)
            self._run_stage(AppState.REPORT, stats.report, self.on_report)
        except (UsageError, OSError, ValueError) as exc:
            stats.exception_count += 1
            self._logger.error(f"{self._state.name.lower() if self._state else 'run'} failed: {exc}")
            self._log_fallback(self._state.name.lower() if self._state else "run", exc)
            return EXIT_USAGE
        except Exception as exc:
            stats.exception_count += 1
            self._logger.critical(f"unexpected failure: {exc}")
            self._logger.debug(format_exc())
            return EXIT_FAILURE
        return self.exit_code

    # ────────────────────────────────────────────────────────────
    # Override Points
    # ────────────────────────────────────────────────────────────

    def on_prepare(self) -> None:
        pass

    def on_execute(self) -> None:
        pass

    def on_report(self) -> None:
        pass

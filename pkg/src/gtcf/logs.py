"""Logging utilities for the workbench."""

from __future__ import annotations

import logging
import traceback
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Dict, List, Optional

from .config.settings import settings


def logs_dir() -> Path:
    """Get the logs directory path."""
    log_dir = Path(settings.logs_dir or "logs")
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir


def _rotating(path: Path, fmt: str) -> RotatingFileHandler:
    handler = RotatingFileHandler(path, maxBytes=10 * 1024 * 1024, backupCount=5)
    handler.setFormatter(logging.Formatter(fmt))
    return handler


class LogManager:
    """Manager for workbench logs."""

    _instance: Optional[LogManager] = None

    @classmethod
    def get_instance(cls) -> LogManager:
        """Get or create the singleton instance."""
        if cls._instance is None:
            cls._instance = LogManager()
        return cls._instance

    def __init__(self) -> None:
        self.loggers: Dict[str, logging.Logger] = {}
        self._setup_loggers()

    def _setup_loggers(self) -> None:
        log_dir = logs_dir()

        # Root logger collects module-level logging from the library
        root_logger = logging.getLogger()
        if not root_logger.handlers:
            root_logger.addHandler(
                _rotating(log_dir / "system.log", "%(asctime)s - %(levelname)s - %(name)s - %(message)s")
            )
            root_logger.setLevel(logging.INFO)

        for name, filename, level in (
            ("system", "system.log", logging.INFO),
            ("search", "search.log", logging.INFO),
        ):
            lg = logging.getLogger(f"gtcf.{name}")
            lg.propagate = False
            lg.setLevel(level)
            if not lg.handlers:
                lg.addHandler(_rotating(log_dir / filename, "%(asctime)s - %(levelname)s - %(message)s"))
            self.loggers[name] = lg

        error_logger = logging.getLogger("gtcf.error")
        error_logger.propagate = False
        error_logger.setLevel(logging.ERROR)
        if not error_logger.handlers:
            error_logger.addHandler(
                _rotating(
                    log_dir / "error.log",
                    "%(asctime)s - %(levelname)s - %(message)s\n%(pathname)s:%(lineno)d",
                )
            )
        self.loggers["error"] = error_logger

    def _log(self, channel: str, message: str, level: str) -> None:
        lg = self.loggers[channel]
        lg.log(getattr(logging, level.upper(), logging.INFO), message)
        if level.upper() == "ERROR":
            self.loggers["error"].error(f"{channel.upper()}: {message}")

    def log_system(self, message: str, level: str = "INFO") -> None:
        self._log("system", message, level)

    def log_search(self, message: str, level: str = "INFO") -> None:
        """Witness search, certification and Groebner budget events."""
        self._log("search", message, level)

    def log_error(self, message: str, exception: Optional[BaseException] = None) -> None:
        if exception:
            tb = "".join(traceback.format_exception(exception))
            self.loggers["error"].error(f"{message}\n{tb}")
        else:
            self.loggers["error"].error(message)

    def read_logs(
        self,
        log_type: str,
        max_lines: int = 1000,
        search_text: Optional[str] = None,
        level_filter: Optional[str] = None,
    ) -> List[Dict[str, str]]:
        """Read a log file, newest first, with optional filtering."""
        log_file = logs_dir() / f"{log_type}.log"
        if not log_file.exists():
            return []

        lines = log_file.read_text(encoding="utf-8").splitlines()[-max_lines:]
        processed: List[Dict[str, str]] = []
        for line in lines:
            # '2025-09-10 12:34:56,789 - INFO - message'
            parts = line.split(" - ", 3)
            if len(parts) >= 3:
                if search_text and search_text.lower() not in line.lower():
                    continue
                if level_filter and parts[1].strip() != level_filter:
                    continue
                processed.append(
                    {"timestamp": parts[0].strip(), "level": parts[1].strip(), "message": parts[-1].strip()}
                )
            elif processed:
                # continuation line (tracebacks)
                processed[-1]["message"] += "\n" + line.strip()
        return list(reversed(processed))


def get_log_manager() -> LogManager:
    """Get the log manager instance."""
    return LogManager.get_instance()


def log_system(message: str, level: str = "INFO") -> None:
    get_log_manager().log_system(message, level)


def log_search(message: str, level: str = "INFO") -> None:
    get_log_manager().log_search(message, level)


def log_error(message: str, exception: Optional[BaseException] = None) -> None:
    get_log_manager().log_error(message, exception)


def read_logs(
    log_type: str,
    max_lines: int = 1000,
    search_text: Optional[str] = None,
    level_filter: Optional[str] = None,
) -> List[Dict[str, str]]:
    return get_log_manager().read_logs(log_type, max_lines, search_text, level_filter)

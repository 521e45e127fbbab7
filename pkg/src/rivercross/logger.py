"""Run logging infrastructure for the rivercross CLI.

This module provides the RunLogger class for timestamped progress lines
with terminal and file destinations. Terminal lines go to stderr so that
command payloads on stdout stay byte-stable.
"""

import sys
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, List, Optional, TextIO

from rivercross.status import RunStatus


class LogLevel(Enum):
    """Logging verbosity levels for CLI runs."""

    NONE = "none"
    """Nothing but the exit code."""

    SUMMARY = "summary"
    """Start line, written files and the final status."""

    ALL = "all"
    """Every step, including graph sizes and law checks."""


class RunLogger:
    """Progress lines for one CLI run, on the terminal and optionally a file.

    Lines have the form ``YYYY-mm-dd HH:MM:SS [rivercross] MESSAGE``.
    Summary lines appear at ``summary`` and ``all``, detail lines only at
    ``all`` and errors always.

    Args:
        terminal: Write lines to the terminal stream.
        log_file: Also append lines here; the file opens with the first
            line written.
        log_level: Which lines are written.
        stream: Terminal stream, stderr unless given.
    """

    def __init__(
        self,
        terminal: bool = True,
        log_file: Optional[Path] = None,
        log_level: LogLevel = LogLevel.SUMMARY,
        stream: Optional[TextIO] = None,
    ) -> None:
        self.terminal = terminal
        self.log_file = log_file
        self.log_level = log_level

        self._terminal_stream: TextIO = stream or sys.stderr
        self._file_stream: Optional[TextIO] = None
        self.lines: List[str] = []

    def _ensure_file(self) -> TextIO:
        """Return the log file stream, opening it on first use."""
        if self._file_stream is None:
            assert self.log_file is not None
            self.log_file.parent.mkdir(parents=True, exist_ok=True)
            # runs append to one file
            self._file_stream = open(self.log_file, "a", encoding="utf-8")
        return self._file_stream

    def close(self) -> None:
        """Close the log file if it was opened; safe to call twice."""
        if self._file_stream is not None:
            self._file_stream.close()
            self._file_stream = None

    def __enter__(self) -> "RunLogger":
        return self

    def __exit__(
        self,
        exc_type: Optional[type],
        exc_val: Optional[Exception],
        exc_tb: Any,
    ) -> None:
        self.close()

    def _write(self, message: str) -> None:
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        line = f"{timestamp} [rivercross] {message}"
        self.lines.append(line)
        if self.terminal:
            self._terminal_stream.write(line + "\n")
            self._terminal_stream.flush()
        if self.log_file:
            stream = self._ensure_file()
            stream.write(line + "\n")
            stream.flush()

    def summary(self, message: str) -> None:
        """Log a key status line."""
        if self.log_level is not LogLevel.NONE:
            self._write(message)

    def detail(self, message: str) -> None:
        """Log an intermediate detail line."""
        if self.log_level is LogLevel.ALL:
            self._write(message)

    def error(self, message: str) -> None:
        """Log an error line regardless of level."""
        self._write(f"ERROR {message}")

    def status(self, status: RunStatus, message: str) -> None:
        """Log a final outcome line, ``STATUS message``."""
        if status.is_error:
            self.error(f"{status.value} {message}")
        else:
            self.summary(f"{status.value:10} {message}")

"""
The report stream: one line per Report on standard output, JSON when asked
for, plus a summary on standard error.
"""

import logging
import sys
from typing import IO, Iterable, Optional

from conflab.core.structures import Report, Status
from conflab.util.logging import JsonFormatter, Logger, get_logger

REPORT_LOGGER = "conflab.report"

REPORT_SCHEMA = {
    "check": "check",
    "target": "target",
    "status": "status",
    "witness": "witness",
    "detail": "detail",
}

TIMED_SCHEMA = {**REPORT_SCHEMA, "elapsed": "elapsed", "time": "@time"}


class ReportStream:
    """
    Emits Reports in the order given. The JSON form has no timestamp unless
    ``timings`` is set, so equal inputs give byte-identical streams.

    :param as_json: Emit JSON lines instead of text lines.
    :param timings: Add ``elapsed`` and ``time`` to each record.
    :param stream: Output stream; standard output by default.
    :param logger: Logger for the summary on standard error.
    """

    def __init__(
        self,
        as_json: bool = False,
        timings: bool = False,
        stream: Optional[IO[str]] = None,
        logger: Optional[Logger] = None,
    ):
        self.timings = timings
        self.logger = logger or get_logger("conflab.cli")
        self.reports: list[Report] = []
        self._out = logging.getLogger(REPORT_LOGGER)
        for handler in list(self._out.handlers):
            self._out.removeHandler(handler)
        handler = logging.StreamHandler(stream or sys.stdout)
        if as_json:
            handler.setFormatter(
                JsonFormatter(TIMED_SCHEMA if timings else REPORT_SCHEMA)
            )
        else:
            handler.setFormatter(logging.Formatter("%(message)s"))
        self._out.addHandler(handler)
        self._out.setLevel(logging.INFO)
        self._out.propagate = False

    def _line(self, report: Report) -> str:
        line = f"{report.status.value.upper():7} {report.check} {report.target}"
        if report.witness:
            line += f" witness {report.witness}"
        if self.timings and report.elapsed is not None:
            line += f" ({report.elapsed:.3f}s)"
        return line

    def emit(self, report: Report) -> None:
        self.reports.append(report)
        self._out.info(self._line(report), extra=report.to_record(self.timings))
        if report.status is Status.FAIL:
            self.logger.log_check(
                logging.WARNING,
                report.check,
                report.target,
                report.status.value,
                "check failed",
                report.witness,
            )

    def emit_all(self, reports: Iterable[Report]) -> None:
        for report in reports:
            self.emit(report)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.reports if r.status is Status.FAIL)

    def summarize(self) -> int:
        """Log the totals and return the exit code, 1 when anything failed."""
        skipped = sum(1 for r in self.reports if r.status is Status.SKIPPED)
        self.logger.info(
            f"{len(self.reports)} checks: {len(self.reports) - self.failed - skipped}"
            f" passed, {self.failed} failed, {skipped} skipped"
        )
        return 1 if self.failed else 0

"""Command reports and their JSON, CSV and text renderings."""

import csv
from dataclasses import (dataclass, field)
import io
import json
import logging
from pathlib import Path
from typing import (Any, Dict, List, Optional, TextIO)

import yaml

from dempoly.models.config import OutputFormatEnum

# Get logger instance
logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2


@dataclass
class Report:
    """Result of a command.

    Args:
        command: Name of the command.
        payload: JSON-compatible document.
        rows: Flat table rows for the CSV rendering; defaults to a single row
            of the scalar payload members.
        passed: Outcome of a check; ``None`` for commands that only compute.
        exit_code: Overrides the exit code derived from `passed`.

    Attributes:
        command: Name of the command.
        payload: JSON-compatible document.
        rows: Flat table rows for the CSV rendering.
        passed: Outcome of a check.
    """
    command: str
    payload: Dict[str, Any]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    passed: Optional[bool] = None
    exit_code: Optional[int] = None

    @property
    def code(self) -> int:
        """Process exit code of the report."""
        if self.exit_code is not None:
            return self.exit_code
        return EXIT_FAIL if self.passed is False else EXIT_PASS

    def summary(self) -> str:
        """One-line summary for log messages."""
        status = {
            None: "done",
            True: "pass",
            False: "FAIL",
        }[self.passed]
        return f"{status} (exit code {self.code})"

    def document(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"command": self.command}
        if self.passed is not None:
            out["passed"] = self.passed
        out.update(self.payload)
        return out

    def table(self) -> List[Dict[str, Any]]:
        if self.rows:
            return self.rows
        return [{
            key: value for key, value in self.document().items()
            if not isinstance(value, (dict, list))
        }]

    def render(
        self,
        format: OutputFormatEnum = OutputFormatEnum.json,
        indent: Optional[int] = 2,
    ) -> str:
        """Render the report.

        Args:
            format: Output format.
            indent: JSON indentation.

        Returns:
            Rendered report, ending in a newline.
        """
        if format is OutputFormatEnum.csv:
            return _render_csv(self.table())
        if format is OutputFormatEnum.text:
            return yaml.safe_dump(
                self.document(),
                sort_keys=False,
                default_flow_style=None,
                allow_unicode=True,
            )
        return json.dumps(self.document(), indent=indent) + "\n"

    def write(
        self,
        format: OutputFormatEnum = OutputFormatEnum.json,
        indent: Optional[int] = 2,
        out: Optional[Path] = None,
        stream: Optional[TextIO] = None,
    ) -> None:
        """Write the rendered report to `out` or to `stream`."""
        text = self.render(format, indent)
        if out is not None:
            with open(out, "w", encoding="utf-8") as handle:
                handle.write(text)
            logger.info(f"Report written to '{out}'.")
        elif stream is not None:
            stream.write(text)


def _cell(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return value


def _render_csv(rows: List[Dict[str, Any]]) -> str:
    buffer = io.StringIO()
    header: List[str] = []
    for row in rows:
        header.extend(key for key in row if key not in header)
    writer = csv.DictWriter(buffer, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(value) for key, value in row.items()})
    return buffer.getvalue()

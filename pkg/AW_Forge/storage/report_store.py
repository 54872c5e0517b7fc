"""
Report model and writers for command output.

Reports are written as JSON with sorted keys so identical runs produce
identical bytes; recurrence tables can also be written as CSV with header
n,diag,sub.
"""

import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from AW_Forge import REPORT_SCHEMA, __version__

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ["n", "diag", "sub"]


class Report(BaseModel):
    """Output of one CLI command."""

    model_config = ConfigDict(populate_by_name=True)

    schema_: str = Field(default=REPORT_SCHEMA, alias="schema")
    version: str = __version__
    command: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    mode: str
    status: str                                     # pass, fail or error
    realization: Optional[Dict[str, Any]] = None
    representation: Optional[Dict[str, Any]] = None
    checks: List[Dict[str, Any]] = Field(default_factory=list)
    result: Dict[str, Any] = Field(default_factory=dict)
    error: Optional[Dict[str, Any]] = None
    timing: Optional[Dict[str, float]] = None       # only with --timing

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class ReportStore:
    """Writes reports and tables to stdout or to files."""

    def __init__(self, pretty: bool = False):
        """
        Initialize report store.

        Args:
            pretty: Indent JSON output
        """
        self.pretty = pretty

    def dumps(self, report: Report) -> str:
        """Serialize a report to JSON text."""
        payload = report.model_dump(by_alias=True, exclude_none=True)
        return json.dumps(payload, sort_keys=True, indent=2 if self.pretty else None)

    def write_json(self, report: Report, out: Optional[Union[str, Path]] = None):
        """
        Write a report as JSON.

        Args:
            report: Report to write
            out: Output path (stdout when None or '-')
        """
        text = self.dumps(report)
        self._write(text + "\n", out)
        logger.debug(f"Wrote {report.command} report to {out or 'stdout'}")

    def write_csv(self, table: List[Dict[str, Any]], out: Optional[Union[str, Path]] = None):
        """
        Write a recurrence table as CSV with header n,diag,sub.

        Args:
            table: Rows with keys n, diag, sub (scalars already rendered as strings)
            out: Output path (stdout when None or '-')
        """
        frame = pd.DataFrame(table, columns=TABLE_COLUMNS)
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        self._write(buffer.getvalue(), out)
        logger.debug(f"Wrote {len(frame)} table rows to {out or 'stdout'}")

    @staticmethod
    def read_json(path: Union[str, Path]) -> Report:
        """Load a report written by write_json."""
        return Report.model_validate_json(Path(path).read_text())

    @staticmethod
    def read_csv(source: Union[str, Path, TextIO]) -> List[Dict[str, str]]:
        """Load a CSV table, keeping every cell as text."""
        frame = pd.read_csv(source, dtype=str, keep_default_na=False)
        return frame.to_dict(orient="records")

    @staticmethod
    def _write(text: str, out: Optional[Union[str, Path]]):
        if out is None or str(out) == "-":
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)

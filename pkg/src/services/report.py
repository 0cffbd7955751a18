"""
Report delivery: writes computed values and check verdicts to standard output.
"""
import logging
import sys
from typing import List, Optional, TextIO

from src.models.job import OutputFormat
from src.models.record import CheckRecord, Status

logger = logging.getLogger(__name__)

STATUS_LABELS = {
    Status.PASS: "PASS",
    Status.FAIL: "FAIL",
    Status.VALUE: "",
}


class ReportService:
    """Renders CheckRecords as an aligned table or as one JSON object per line."""

    def __init__(self, output_format: OutputFormat, stream: Optional[TextIO] = None):
        self.output_format = output_format
        self.stream = stream

    def deliver(self, records: List[CheckRecord], title: str = "") -> bool:
        """Write the report; returns True when no record failed."""
        text = self.render(records, title)
        stream = self.stream or sys.stdout
        stream.write(text)
        stream.flush()
        failed = sum(1 for record in records if record.failed)
        if failed:
            logger.warning(f"{failed} of {len(records)} records failed")
        else:
            logger.info(f"Delivered {len(records)} records")
        return failed == 0

    def render(self, records: List[CheckRecord], title: str = "") -> str:
        if self.output_format is OutputFormat.RECORDS:
            return self._format_records(records)
        return self._format_table(records, title)

    def _format_records(self, records: List[CheckRecord]) -> str:
        return "".join(record.to_json() + "\n" for record in records)

    def _format_table(self, records: List[CheckRecord], title: str) -> str:
        lines = []
        if title:
            lines.extend([title, "=" * len(title)])

        values = [r for r in records if r.status is Status.VALUE]
        verdicts = [r for r in records if r.status is not Status.VALUE]

        if values:
            width = max(len(r.check) for r in values)
            for record in values:
                lines.append(f"{record.check:<{width}} = {record.detail}")

        if verdicts:
            if values:
                lines.append("")
            check_width = max(len(r.check) for r in verdicts)
            param_width = max(len(r.params_text()) for r in verdicts)
            for record in verdicts:
                line = f"{STATUS_LABELS[record.status]:<4}  {record.check:<{check_width}}  {record.params_text():<{param_width}}"
                if record.detail:
                    line += f"  {record.detail}"
                lines.append(line.rstrip())
            failed = sum(1 for r in verdicts if r.failed)
            lines.append("-" * 40)
            lines.append(f"{len(verdicts)} checks, {len(verdicts) - failed} passed, {failed} failed")

        return "\n".join(lines) + "\n" if lines else ""

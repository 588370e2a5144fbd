"""
Report formatter.

Renders a check report as a rich table followed by a summary line and the
report notes. All cell content is plain Text so expression strings such as
"[X1, X2] = X2" are never read as console markup.
"""

from typing import Dict, List

from rich.console import Group, RenderableType
from rich.table import Table
from rich.text import Text

from jacobilie.cli.formatters.text_utils import bullet_lines, truncate_text
from jacobilie.models import Report, Verdict

VERDICT_STYLES: Dict[Verdict, str] = {
    Verdict.PASS: "green",
    Verdict.NUMERIC_PASS: "cyan",
    Verdict.DISCREPANCY: "yellow",
    Verdict.FAIL: "bold red",
}


class ReportFormatter:
    """
    Formats a Report for the terminal.

    Attributes:
        terminal_width: Width used to wrap notes
        max_detail_lines: Detail lines shown per record before eliding
        max_detail_length: Characters shown per detail line
    """

    def __init__(self, terminal_width: int = 80, max_detail_lines: int = 12, max_detail_length: int = 400):
        self.terminal_width = terminal_width
        self.max_detail_lines = max_detail_lines
        self.max_detail_length = max_detail_length

    def format(self, report: Report) -> RenderableType:
        """Build the renderable for a report."""
        parts: List[RenderableType] = [self._table(report), Text(self._summary(report))]
        if report.notes:
            notes = "\n".join(bullet_lines(report.notes, width=self.terminal_width))
            parts.append(Text("Notes:\n" + notes))
        return Group(*parts)

    def _table(self, report: Report) -> Table:
        table = Table(title=Text(report.command), show_lines=False)
        table.add_column("Check", style="bold")
        table.add_column("Verdict", no_wrap=True)
        table.add_column("Detail")
        for record in report.records:
            table.add_row(
                Text(record.name),
                Text(record.verdict.value, style=VERDICT_STYLES[record.verdict]),
                Text(self._detail(record.detail)),
            )
        return table

    def _detail(self, detail: List[str]) -> str:
        shown = [truncate_text(line, self.max_detail_length) for line in detail[: self.max_detail_lines]]
        hidden = len(detail) - len(shown)
        if hidden > 0:
            shown.append(f"... {hidden} more")
        return "\n".join(shown)

    @staticmethod
    def _summary(report: Report) -> str:
        counts = report.summary()
        body = ", ".join(f"{counts[v.value]} {v.value}" for v in Verdict)
        return f"Verdict: {report.verdict.value} ({body})"

"""
Catalog formatter: the algebra listing and the single-algebra view.
"""

from typing import List

from rich.table import Table
from rich.text import Text

from jacobilie.cli.formatters.text_utils import wrap_text
from jacobilie.models import LieAlgebra, TableRow


class CatalogFormatter:
    """Formats catalog entries for terminal display."""

    def __init__(self, terminal_width: int = 80):
        self.terminal_width = terminal_width

    def format_list(self, algebras: List[LieAlgebra]) -> Table:
        table = Table(title=f"Lie algebras ({len(algebras)} total)")
        table.add_column("Name", style="green", no_wrap=True)
        table.add_column("Dim", style="cyan", width=3)
        table.add_column("Brackets")
        table.add_column("Parameter", style="yellow")
        for algebra in algebras:
            brackets = "\n".join(algebra.bracket_lines()) or "abelian"
            parameter = ""
            if algebra.parameter:
                parameter = f"{algebra.parameter}: {algebra.parameter_condition}".rstrip(": ")
            table.add_row(Text(algebra.name), str(algebra.dim), Text(brackets), Text(parameter))
        return table

    def format_algebra(self, algebra: LieAlgebra, rows: List[TableRow]) -> str:
        """Plain text view of one algebra and its catalogued Jacobi structures."""
        separator = "=" * min(self.terminal_width, 70)
        lines = [separator, f"{algebra.name} (dimension {algebra.dim})", separator, ""]

        lines.append("BRACKETS")
        brackets = algebra.bracket_lines()
        lines.extend(f"  {b}" for b in brackets or ["abelian"])
        if algebra.parameter:
            lines.append("")
            lines.append(f"PARAMETER {algebra.parameter}")
            lines.append(f"  {algebra.parameter_condition or 'unrestricted'}")
        if algebra.description:
            lines.append("")
            lines.append("DESCRIPTION")
            lines.append(wrap_text(algebra.description, width=self.terminal_width, indent=2))

        lines.append("")
        lines.append(f"JACOBI STRUCTURES ({len(rows)} rows)")
        for row in rows:
            lines.append(f"  {row.id}: {row.family}")
            for condition in row.family.conditions:
                lines.append(f"      {condition.text()}")
            for cls in row.classes:
                lines.append(f"    {cls.id}: {cls.structure}")
        return "\n".join(lines)

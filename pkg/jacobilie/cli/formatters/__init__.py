"""
Output formatters for the CLI.
"""

from jacobilie.cli.formatters.catalog_formatter import CatalogFormatter
from jacobilie.cli.formatters.report_formatter import ReportFormatter
from jacobilie.cli.formatters.text_utils import bullet_lines, truncate_text, wrap_text

__all__ = [
    "CatalogFormatter",
    "ReportFormatter",
    "bullet_lines",
    "truncate_text",
    "wrap_text",
]

"""
Storage module for JacobiLie.

Persists check reports as JSON.
"""

from jacobilie.storage.report_storage import ReportStorage

__all__ = ["ReportStorage"]

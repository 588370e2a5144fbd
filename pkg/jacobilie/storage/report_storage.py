"""
JSON persistence for check reports.

Reports are written atomically: the JSON goes to a temporary file in the
target directory which is then renamed over the destination, so a reader
never sees a partially written report.
"""

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Union

from jacobilie.errors import ReportStorageError
from jacobilie.models import Report


logger = logging.getLogger(__name__)


class ReportStorage:
    """
    File storage for reports in their JSON form.

    Attributes:
        directory: Base directory for relative paths (None means the current directory)
    """

    def __init__(self, directory: Union[str, Path, None] = None):
        self.directory = Path(directory) if directory is not None else None

    def _resolve(self, path: Union[str, Path]) -> Path:
        target = Path(path)
        if self.directory is not None and not target.is_absolute():
            target = self.directory / target
        return target

    def save(self, report: Report, path: Union[str, Path]) -> Path:
        """
        Write a report as JSON.

        Args:
            report: Report to save
            path: Destination file

        Returns:
            The path written

        Raises:
            ReportStorageError: If the report cannot be written
        """
        target = self._resolve(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            temp_fd, temp_path = tempfile.mkstemp(
                dir=target.parent,
                prefix=".tmp_",
                suffix=".json"
            )
            try:
                with os.fdopen(temp_fd, 'w', encoding='utf-8') as f:
                    json.dump(report.to_dict(), f, indent=2, ensure_ascii=False)
                    f.write("\n")
                os.replace(temp_path, str(target))
            except Exception:
                try:
                    os.unlink(temp_path)
                except OSError:
                    pass
                raise

            logger.info(f"Saved report '{report.command}' to {target}")
            return target

        except Exception as e:
            logger.error(f"Failed to save report: {e}", exc_info=True)
            raise ReportStorageError(f"Failed to save report to {target}: {e}", cause=e)

    def load(self, path: Union[str, Path]) -> Report:
        """
        Read a report written by save().

        Raises:
            ReportStorageError: If the file is missing, not JSON or not a report
        """
        target = self._resolve(path)
        try:
            with open(target, 'r', encoding='utf-8') as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise ReportStorageError(
                    f"Report file contains invalid data: expected object, "
                    f"got {type(data).__name__}"
                )
            return Report.from_dict(data)

        except json.JSONDecodeError as e:
            logger.error(f"Failed to parse JSON from {target}: {e}", exc_info=True)
            raise ReportStorageError(f"Report file is corrupted or contains invalid JSON: {e}", cause=e)
        except ReportStorageError:
            raise
        except Exception as e:
            logger.error(f"Failed to load report: {e}", exc_info=True)
            raise ReportStorageError(f"Failed to load report from {target}: {e}", cause=e)

    def exists(self, path: Union[str, Path]) -> bool:
        target = self._resolve(path)
        return target.exists() and target.is_file()

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"ReportStorage(directory='{self.directory}')"

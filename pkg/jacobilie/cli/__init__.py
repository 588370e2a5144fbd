"""CLI module for JacobiLie."""

from jacobilie.cli.app_context import AppContext
from jacobilie.cli.main import cli

__all__ = ["cli", "AppContext"]

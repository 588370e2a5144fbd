"""
Application context for the CLI.

A single instance owns the catalog repository and hands out seeded zero
testers, so every command in a process works from the same loaded data.
"""

import logging
import random
from pathlib import Path
from typing import Optional

from jacobilie.config import settings
from jacobilie.loaders import CatalogLoader, LoaderStats
from jacobilie.repository import ICatalogRepository, InMemoryCatalogRepository
from jacobilie.symexpr import ZeroTester

logger = logging.getLogger(__name__)


class AppContext:
    """
    Application context singleton.

    Example:
        ctx = AppContext.get_instance()
        ctx.initialize()
        algebra = ctx.repository.get_algebra("III")
        tester = ctx.tester(seed=7)
    """

    _instance: Optional["AppContext"] = None

    def __init__(self):
        """Initialize context (use get_instance() instead)."""
        if AppContext._instance is not None:
            raise RuntimeError("Use AppContext.get_instance() to get the singleton instance")
        self._reset_state()

    def _reset_state(self) -> None:
        self._repository: Optional[ICatalogRepository] = None
        self._initialized: bool = False
        self._load_stats: Optional[LoaderStats] = None

    @classmethod
    def get_instance(cls) -> "AppContext":
        if cls._instance is None:
            cls._instance = cls.__new__(cls)
            cls._instance._reset_state()
        return cls._instance

    @classmethod
    def reset_instance(cls) -> None:
        """Reset the singleton instance (for testing)."""
        cls._instance = None

    def initialize(self, auto_load: bool = True) -> None:
        """
        Create the repository and optionally load the catalog.

        Args:
            auto_load: Load the catalog from settings.get_catalog_dir()
        """
        if self._initialized:
            return
        self._repository = InMemoryCatalogRepository()
        if auto_load:
            self.load_catalog()
        self._initialized = True

    def load_catalog(self, directory: Optional[Path] = None) -> LoaderStats:
        """
        Load catalog files into the repository.

        Args:
            directory: Catalog directory (uses the configured one if None)

        Raises:
            RuntimeError: If the repository has not been created
        """
        if self._repository is None:
            raise RuntimeError("Repository not initialized. Call initialize() first.")
        directory = directory or settings.get_catalog_dir()
        self._load_stats = CatalogLoader(self._repository).load_directory(directory)
        logger.info(f"Catalog loaded from {directory}: {self._load_stats}")
        return self._load_stats

    def tester(self, seed: Optional[int] = None) -> ZeroTester:
        """A zero tester seeded with seed, or with settings.seed."""
        return ZeroTester.seeded(seed)

    def rng(self, seed: Optional[int] = None) -> random.Random:
        return random.Random(settings.seed if seed is None else seed)

    @property
    def repository(self) -> ICatalogRepository:
        if self._repository is None:
            raise RuntimeError("AppContext not initialized. Call initialize() first.")
        return self._repository

    @property
    def load_stats(self) -> Optional[LoaderStats]:
        """Statistics of the last catalog load."""
        return self._load_stats

    @property
    def is_initialized(self) -> bool:
        return self._initialized

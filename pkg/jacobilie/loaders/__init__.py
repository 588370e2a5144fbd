"""
Loaders module for JacobiLie.

Reads the YAML catalog into a repository.
"""

from jacobilie.loaders.catalog_loader import (
    CatalogLoader,
    LoaderStats,
    default_repository,
    load_catalog,
)

__all__ = ["CatalogLoader", "LoaderStats", "default_repository", "load_catalog"]

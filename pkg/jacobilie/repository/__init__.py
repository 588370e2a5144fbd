"""
Repository module for JacobiLie.

Implements the Repository pattern for catalog data access.
"""

from jacobilie.repository.repository_interface import ICatalogRepository, RepositoryError
from jacobilie.repository.catalog_repository import InMemoryCatalogRepository

__all__ = ["ICatalogRepository", "RepositoryError", "InMemoryCatalogRepository"]

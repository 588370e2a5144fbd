"""Access to the catalogued Lie algebras."""

from typing import List, Optional

from jacobilie.loaders import default_repository
from jacobilie.models import LieAlgebra
from jacobilie.repository import ICatalogRepository


def catalog(repository: Optional[ICatalogRepository] = None) -> List[LieAlgebra]:
    """All catalogued algebras: A1, A2, then Bianchi I to IX."""
    return (repository or default_repository()).list_algebras()


def get_algebra(name: str, repository: Optional[ICatalogRepository] = None) -> LieAlgebra:
    """
    Look up an algebra by name.

    Raises:
        UnknownAlgebra: If the name is not catalogued
    """
    return (repository or default_repository()).get_algebra(name)

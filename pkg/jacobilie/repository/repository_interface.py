"""
Repository interface for the JacobiLie catalog.

The catalog holds everything the library reads from data files: algebras,
classification rows, automorphism families, vielbeins, worked Hamiltonian
examples and reductions. Operations depend on this abstraction so tests can
hand in small purpose-built catalogs.
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from jacobilie.errors import JacobiError
from jacobilie.models import AlgJacobiStructure, LieAlgebra, TableRow
from jacobilie.models.automorphism import AutomorphismFamily
from jacobilie.models.example import HamiltonianExample, Reduction
from jacobilie.models.geometry import Vielbein


class ICatalogRepository(ABC):
    """Abstract catalog repository."""

    @abstractmethod
    def add_algebra(self, algebra: LieAlgebra) -> None:
        """
        Add an algebra.

        Raises:
            RepositoryError: If an algebra with the same name exists
        """

    @abstractmethod
    def get_algebra(self, name: str) -> LieAlgebra:
        """
        Retrieve an algebra by catalog name.

        Raises:
            UnknownAlgebra: If the name is not catalogued
        """

    @abstractmethod
    def list_algebras(self) -> List[LieAlgebra]:
        """All algebras in catalog order."""

    @abstractmethod
    def add_row(self, row: TableRow) -> None:
        """
        Add a classification row.

        Raises:
            RepositoryError: On duplicate row or class identifiers
        """

    @abstractmethod
    def list_rows(self, algebra: Optional[str] = None) -> List[TableRow]:
        """Rows in catalog order, optionally for one algebra."""

    @abstractmethod
    def find_structure(self, identifier: str) -> Tuple[TableRow, AlgJacobiStructure]:
        """
        Resolve a row id ("III.2") or class id ("III.2.a") to its structure.

        Raises:
            UnknownRow: If nothing carries the identifier
        """

    @abstractmethod
    def add_automorphism_family(self, family: AutomorphismFamily) -> None:
        """Add the automorphism family of an algebra."""

    @abstractmethod
    def get_automorphism_family(self, algebra: str) -> AutomorphismFamily:
        """
        Raises:
            UnknownAlgebra: If no family is catalogued for the algebra
        """

    @abstractmethod
    def add_vielbein(self, vielbein: Vielbein) -> None:
        """Add the vielbein of a group."""

    @abstractmethod
    def get_vielbein(self, group: str) -> Vielbein:
        """
        Raises:
            UnknownGroup: If no vielbein is catalogued for the group
        """

    @abstractmethod
    def list_vielbeins(self) -> List[Vielbein]:
        """All vielbeins in catalog order."""

    @abstractmethod
    def add_example(self, example: HamiltonianExample) -> None:
        """Add a worked Hamiltonian example."""

    @abstractmethod
    def get_example(self, number: int) -> HamiltonianExample:
        """
        Raises:
            UnknownExample: If the number is not catalogued
        """

    @abstractmethod
    def list_examples(self) -> List[HamiltonianExample]:
        """Examples ordered by number."""

    @abstractmethod
    def add_reduction(self, reduction: Reduction) -> None:
        """Add a reduction."""

    @abstractmethod
    def get_reduction(self, name: str) -> Reduction:
        """
        Raises:
            UnknownRow: If no reduction has the name
        """

    @abstractmethod
    def list_reductions(self) -> List[Reduction]:
        """Reductions in catalog order."""

    @abstractmethod
    def count(self) -> int:
        """Total number of catalogued records of all kinds."""


class RepositoryError(JacobiError):
    """Raised when the catalog repository rejects an operation."""

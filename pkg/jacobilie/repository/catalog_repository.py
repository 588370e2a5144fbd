"""
In-memory catalog repository.

Records are indexed by their natural keys; dicts keep insertion order, which
is the catalog order of the data files.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Optional, Tuple

from jacobilie.errors import UnknownAlgebra, UnknownExample, UnknownGroup, UnknownRow
from jacobilie.models import AlgJacobiStructure, LieAlgebra, TableRow
from jacobilie.models.automorphism import AutomorphismFamily
from jacobilie.models.example import HamiltonianExample, Reduction
from jacobilie.models.geometry import Vielbein
from jacobilie.repository.repository_interface import ICatalogRepository, RepositoryError

logger = logging.getLogger(__name__)


class InMemoryCatalogRepository(ICatalogRepository):
    """
    In-memory catalog with one index per record kind.

    Attributes:
        _algebras: Algebras by name
        _rows: Rows by id
        _rows_by_algebra: Row ids per algebra
        _classes: Class id to (row id, class structure)
    """

    def __init__(self):
        self._algebras: Dict[str, LieAlgebra] = {}
        self._rows: Dict[str, TableRow] = {}
        self._rows_by_algebra: Dict[str, List[str]] = defaultdict(list)
        self._classes: Dict[str, Tuple[str, AlgJacobiStructure]] = {}
        self._automorphisms: Dict[str, AutomorphismFamily] = {}
        self._vielbeins: Dict[str, Vielbein] = {}
        self._examples: Dict[int, HamiltonianExample] = {}
        self._reductions: Dict[str, Reduction] = {}

        logger.info("InMemoryCatalogRepository initialized")

    def add_algebra(self, algebra: LieAlgebra) -> None:
        if algebra.name in self._algebras:
            raise RepositoryError(f"Algebra '{algebra.name}' already exists")
        self._algebras[algebra.name] = algebra
        logger.debug("Added algebra %s", algebra.name)

    def get_algebra(self, name: str) -> LieAlgebra:
        try:
            return self._algebras[name]
        except KeyError:
            raise UnknownAlgebra(f"Unknown algebra: {name}") from None

    def list_algebras(self) -> List[LieAlgebra]:
        return list(self._algebras.values())

    def add_row(self, row: TableRow) -> None:
        if row.id in self._rows or row.id in self._classes:
            raise RepositoryError(f"Row '{row.id}' already exists")
        for cls in row.classes:
            if cls.id in self._classes or cls.id in self._rows:
                raise RepositoryError(f"Class '{cls.id}' already exists")
        self._rows[row.id] = row
        self._rows_by_algebra[row.algebra].append(row.id)
        for cls in row.classes:
            self._classes[cls.id] = (row.id, cls.structure)
        logger.debug("Added row %s with %d classes", row.id, len(row.classes))

    def list_rows(self, algebra: Optional[str] = None) -> List[TableRow]:
        if algebra is None:
            return list(self._rows.values())
        return [self._rows[i] for i in self._rows_by_algebra.get(algebra, [])]

    def find_structure(self, identifier: str) -> Tuple[TableRow, AlgJacobiStructure]:
        if identifier in self._rows:
            row = self._rows[identifier]
            return row, row.family
        if identifier in self._classes:
            row_id, structure = self._classes[identifier]
            return self._rows[row_id], structure
        raise UnknownRow(f"Unknown row or class: {identifier}")

    def add_automorphism_family(self, family: AutomorphismFamily) -> None:
        if family.algebra in self._automorphisms:
            raise RepositoryError(f"Automorphisms of '{family.algebra}' already exist")
        self._automorphisms[family.algebra] = family

    def get_automorphism_family(self, algebra: str) -> AutomorphismFamily:
        try:
            return self._automorphisms[algebra]
        except KeyError:
            raise UnknownAlgebra(f"No automorphism family for algebra: {algebra}") from None

    def add_vielbein(self, vielbein: Vielbein) -> None:
        if vielbein.group in self._vielbeins:
            raise RepositoryError(f"Vielbein of '{vielbein.group}' already exists")
        self._vielbeins[vielbein.group] = vielbein

    def get_vielbein(self, group: str) -> Vielbein:
        try:
            return self._vielbeins[group]
        except KeyError:
            raise UnknownGroup(f"No vielbein catalogued for group: {group}") from None

    def list_vielbeins(self) -> List[Vielbein]:
        return list(self._vielbeins.values())

    def add_example(self, example: HamiltonianExample) -> None:
        if example.number in self._examples:
            raise RepositoryError(f"Example {example.number} already exists")
        self._examples[example.number] = example

    def get_example(self, number: int) -> HamiltonianExample:
        try:
            return self._examples[number]
        except KeyError:
            raise UnknownExample(f"Unknown example: {number}") from None

    def list_examples(self) -> List[HamiltonianExample]:
        return [self._examples[n] for n in sorted(self._examples)]

    def add_reduction(self, reduction: Reduction) -> None:
        if reduction.name in self._reductions:
            raise RepositoryError(f"Reduction '{reduction.name}' already exists")
        self._reductions[reduction.name] = reduction

    def get_reduction(self, name: str) -> Reduction:
        try:
            return self._reductions[name]
        except KeyError:
            raise UnknownRow(f"Unknown reduction: {name}") from None

    def list_reductions(self) -> List[Reduction]:
        return list(self._reductions.values())

    def count(self) -> int:
        return (
            len(self._algebras)
            + len(self._rows)
            + len(self._automorphisms)
            + len(self._vielbeins)
            + len(self._examples)
            + len(self._reductions)
        )

    def __repr__(self) -> str:
        return (
            f"InMemoryCatalogRepository(algebras={len(self._algebras)}, "
            f"rows={len(self._rows)}, examples={len(self._examples)})"
        )

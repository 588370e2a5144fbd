"""
Unit tests for the in-memory catalog repository.
"""

import pytest

from jacobilie.errors import UnknownAlgebra, UnknownExample, UnknownGroup, UnknownRow
from jacobilie.models import AlgJacobiStructure, EquivalenceClass, LieAlgebra, TableRow
from jacobilie.models.geometry import Vielbein
from jacobilie.repository import InMemoryCatalogRepository, RepositoryError


@pytest.fixture
def empty_repository():
    return InMemoryCatalogRepository()


@pytest.fixture
def a2():
    return LieAlgebra.from_brackets("A2", 2, {(1, 2): [0, 1]})


def _row(row_id: str, class_ids=()) -> TableRow:
    structure = AlgJacobiStructure.from_components(2, {"12": 1}, [1, 0])
    return TableRow(
        id=row_id,
        algebra="A2",
        family=structure,
        classes=tuple(EquivalenceClass(id=c, structure=structure) for c in class_ids),
    )


class TestAlgebras:
    """Tests for algebra storage."""

    def test_add_and_get(self, empty_repository, a2):
        empty_repository.add_algebra(a2)
        assert empty_repository.get_algebra("A2") is a2
        assert empty_repository.list_algebras() == [a2]

    def test_duplicate(self, empty_repository, a2):
        empty_repository.add_algebra(a2)
        with pytest.raises(RepositoryError, match="already exists"):
            empty_repository.add_algebra(a2)

    def test_unknown(self, empty_repository):
        with pytest.raises(UnknownAlgebra):
            empty_repository.get_algebra("IX")


class TestRows:
    """Tests for rows and class lookup."""

    def test_find_row_and_class(self, empty_repository):
        empty_repository.add_row(_row("A2.1", ["A2.1.a"]))
        row, family = empty_repository.find_structure("A2.1")
        assert family is row.family
        row_of_class, structure = empty_repository.find_structure("A2.1.a")
        assert row_of_class.id == "A2.1"
        assert structure is row.classes[0].structure

    def test_duplicate_class_ids(self, empty_repository):
        empty_repository.add_row(_row("A2.1", ["A2.1.a"]))
        with pytest.raises(RepositoryError, match="Class 'A2.1.a'"):
            empty_repository.add_row(_row("A2.2", ["A2.1.a"]))
        assert [r.id for r in empty_repository.list_rows()] == ["A2.1"]

    def test_list_rows_by_algebra(self, repository):
        assert [r.id for r in repository.list_rows("III")] == ["III.1", "III.2", "III.3"]
        assert repository.list_rows("VIII") == []

    def test_unknown_row(self, repository):
        with pytest.raises(UnknownRow):
            repository.find_structure("III.9")


class TestOtherRecords:
    """Tests for vielbeins, examples and reductions."""

    def test_vielbeins(self, empty_repository):
        empty_repository.add_vielbein(Vielbein(group="A1", inv_e=[[1, 0], [0, 1]]))
        with pytest.raises(RepositoryError):
            empty_repository.add_vielbein(Vielbein(group="A1", inv_e=[[1, 0], [0, 1]]))
        with pytest.raises(UnknownGroup):
            empty_repository.get_vielbein("V")

    def test_examples_are_sorted(self, repository):
        assert [e.number for e in repository.list_examples()] == [1, 2, 3, 4, 5, 6]
        with pytest.raises(UnknownExample):
            repository.get_example(7)

    def test_reductions(self, repository):
        assert repository.get_reduction("III").row == "III.2"
        with pytest.raises(UnknownRow):
            repository.get_reduction("VI0")

    def test_count(self, empty_repository, a2):
        assert empty_repository.count() == 0
        empty_repository.add_algebra(a2)
        empty_repository.add_row(_row("A2.1"))
        assert empty_repository.count() == 2
        assert "algebras=1" in repr(empty_repository)

"""
Unit tests for group-level geometry: vielbeins, lifting, Schouten brackets
and the Jacobi manifold predicates.
"""

import pytest
import sympy

from jacobilie.errors import DimensionMismatch, DimensionUnsupported, UnknownGroup
from jacobilie.group_geom import (
    coordinate_jacobi_residuals,
    is_jacobi_manifold,
    lift_to_group,
    maurer_cartan_check,
    maurer_cartan_constants,
    schouten_el,
    schouten_ll,
    vielbein_catalog,
    wedge,
)
from jacobilie.models import JacobiPair, Verdict
from jacobilie.models.geometry import Multivector
from jacobilie.symexpr.symbols import x1, x2, x3

GROUPS = ["A2", "II", "III", "IV", "VI0", "VII0"]


@pytest.fixture
def lifted_ii(repository):
    """The Heisenberg structure Λ = X2∧X3, E = X1 lifted to the group."""
    structure = JacobiPair.from_components(3, {"23": 1}, [1, 0, 0])
    return lift_to_group(structure, repository.get_vielbein("II"))


class TestVielbeins:
    """Tests for the vielbein catalog and the Maurer-Cartan check."""

    @pytest.mark.parametrize("group", GROUPS)
    def test_catalogued_frames_match_their_algebras(self, group, repository, tester):
        report = maurer_cartan_check(repository.get_vielbein(group), repository.get_algebra(group), tester)
        assert [r.name for r in report.records] == ["coframe-inverse", "maurer-cartan"]
        assert report.passed

    def test_heisenberg_constants(self, repository):
        c = maurer_cartan_constants(repository.get_vielbein("II"))
        assert c[1][2][0] == -1
        assert c[2][1][0] == 1
        assert c[0][1][2] == 0

    def test_wrong_algebra_fails(self, repository, tester):
        report = maurer_cartan_check(repository.get_vielbein("II"), repository.get_algebra("III"), tester)
        assert report.get("maurer-cartan").verdict is Verdict.FAIL
        assert report.get("coframe-inverse").verdict is Verdict.PASS

    def test_dimension_mismatch(self, repository):
        with pytest.raises(DimensionMismatch):
            maurer_cartan_check(repository.get_vielbein("A2"), repository.get_algebra("III"))

    def test_unknown_group(self, repository):
        with pytest.raises(UnknownGroup):
            vielbein_catalog("V", repository)


class TestLift:
    """Tests for lifting algebra-level structures."""

    def test_heisenberg_lift(self, lifted_ii):
        assert lifted_ii.upper() == {"12": 0, "13": x3, "23": 1}
        assert lifted_ii.reeb == (1, 0, 0)
        assert lifted_ii.group == "II"

    def test_a2_lift(self, repository):
        structure = JacobiPair.from_components(2, {"12": 1}, [1, 0])
        lifted = lift_to_group(structure, repository.get_vielbein("A2"))
        assert lifted.lam[0, 1] == sympy.exp(x2)
        assert lifted.reeb == (sympy.exp(x2), 0)

    def test_dimension_mismatch(self, repository):
        structure = JacobiPair.from_components(2, {"12": 1}, [1, 0])
        with pytest.raises(DimensionMismatch):
            lift_to_group(structure, repository.get_vielbein("II"))


class TestSchouten:
    """Tests for the Schouten-Nijenhuis brackets and the wedge."""

    def test_heisenberg_self_bracket_equals_twice_wedge(self, lifted_ii):
        lam = Multivector.from_bivector(lifted_ii.lam)
        reeb = Multivector.from_vector(lifted_ii.reeb)
        assert schouten_ll(lam).components == {(0, 1, 2): 2}
        assert wedge(reeb, lam).components == {(0, 1, 2): 1}
        assert all(v == 0 for v in schouten_el(reeb, lam).values())

    def test_constant_bivector_is_poisson(self):
        lam = Multivector.from_bivector([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
        assert schouten_ll(lam).components == {(0, 1, 2): 0}

    def test_self_bracket_vanishes_in_dimension_two(self):
        lam = Multivector.from_bivector([[0, x1 * x2], [-x1 * x2, 0]])
        assert schouten_ll(lam).components == {}

    def test_lie_derivative_along_reeb(self):
        lam = Multivector.from_bivector([[0, x1], [-x1, 0]])
        reeb = Multivector.from_vector([1, 0])
        assert schouten_el(reeb, lam).components == {(0, 1): 1}

    def test_wedge_needs_dimension_three(self):
        lam = Multivector.from_bivector([[0, 1], [-1, 0]])
        with pytest.raises(DimensionUnsupported):
            wedge(Multivector.from_vector([1, 0]), lam)

    def test_degree_checks(self):
        vector = Multivector.from_vector([1, 0, 0])
        with pytest.raises(ValueError, match="degree 2"):
            schouten_ll(vector)


class TestJacobiManifold:
    """Tests for the two formulations of the Jacobi conditions."""

    def test_lifted_heisenberg_structure(self, lifted_ii, tester):
        report = is_jacobi_manifold(lifted_ii, tester)
        assert [r.name for r in report.records] == [
            "schouten-ll-minus-2-wedge",
            "schouten-el",
            "coordinate-bivector",
            "coordinate-reeb",
            "formulations-agree",
        ]
        assert report.verdict is Verdict.PASS

    def test_constant_non_jacobi_structure(self, tester):
        """Λ = ∂1∧∂2 with E = ∂3 has E∧Λ ≠ 0 and [[Λ,Λ]] = 0."""
        structure = JacobiPair.from_components(3, {"12": 1}, [0, 0, 1])
        report = is_jacobi_manifold(structure, tester)
        assert report.get("schouten-ll-minus-2-wedge").verdict is Verdict.FAIL
        assert report.get("coordinate-bivector").verdict is Verdict.FAIL
        assert report.get("formulations-agree").verdict is Verdict.PASS
        assert report.exit_code == 1

    def test_two_dimensional_self_bracket_is_vacuous(self, repository, tester):
        structure = JacobiPair.from_components(2, {"12": 1}, [1, 0])
        lifted = lift_to_group(structure, repository.get_vielbein("A2"))
        report = is_jacobi_manifold(lifted, tester)
        assert report.get("schouten-ll-minus-2-wedge").detail == ["vacuous in dimension 2"]
        assert report.verdict is Verdict.PASS

    def test_coordinate_residuals(self):
        structure = JacobiPair.from_components(3, {"12": 1}, [0, 0, 1])
        cubic, quadratic = coordinate_jacobi_residuals(structure)
        assert cubic[(0, 1, 2)] == 1
        assert cubic[(1, 0, 2)] == -1
        assert all(v == 0 for v in quadratic.values())

    @pytest.mark.parametrize("row", ["III.1.a", "III.2.a", "III.2.b", "IV.1.a", "VII0.2.a"])
    def test_lifted_class_representatives(self, row, repository, tester):
        _, structure = repository.find_structure(row)
        algebra = row.split(".")[0]
        lifted = lift_to_group(structure, repository.get_vielbein(algebra))
        assert is_jacobi_manifold(lifted, tester).passed

"""
Unit tests for the algebra-level Jacobi equations and table verification.
"""

import pytest
import sympy

from jacobilie.errors import DimensionMismatch, UnknownAlgebra
from jacobilie.jacobi_alg import (
    residual_bivector,
    residual_polynomials,
    residual_reeb,
    verify_family,
    verify_row,
    verify_table,
)
from jacobilie.jacobi_alg.grid import generic_structure
from jacobilie.models import JacobiPair, Verdict
from jacobilie.symexpr import normalize
from jacobilie.symexpr.symbols import e2, l12


@pytest.fixture
def a2_non_solution():
    """Λ = X1∧X2, E = X2 on A2 violates the Reeb equations."""
    return JacobiPair.from_components(2, {"12": 1}, [0, 1])


class TestResiduals:
    """Tests for the residual components."""

    def test_reeb_residual_of_non_solution(self, algebra, a2_non_solution):
        residual = residual_reeb(algebra("A2"), a2_non_solution)
        assert residual[(0, 1)] == 1
        assert residual[(1, 0)] == -1

    def test_bivector_residual_vanishes_in_dimension_two(self, algebra):
        residual = residual_bivector(algebra("A2"), generic_structure(2))
        assert all(v == 0 for v in residual.values())

    def test_generic_a2_polynomials(self, algebra):
        polys = residual_polynomials(algebra("A2"), generic_structure(2))
        assert len(polys) == 1
        assert polys[0] in (e2 * l12, -e2 * l12)

    def test_abelian_algebra_has_no_equations_without_reeb(self, algebra):
        structure = JacobiPair.from_components(3, {"12": l12, "13": 1}, [0, 0, 0])
        assert residual_polynomials(algebra("I"), structure) == []

    def test_dimension_mismatch(self, algebra, a2_non_solution):
        with pytest.raises(DimensionMismatch):
            residual_bivector(algebra("III"), a2_non_solution)

    @pytest.mark.parametrize("name", ["A2", "II", "III", "VIa", "VIII", "IX"])
    def test_scaling(self, name, algebra):
        """R is quadratic in Λ plus bilinear in (Λ, E); M is bilinear."""
        s, t = sympy.symbols("s t")
        lie = algebra(name)
        structure = generic_structure(lie.dim)

        def scaled(lam_factor, reeb_factor):
            return JacobiPair(lam=structure.lam * lam_factor,
                              reeb=tuple(reeb_factor * v for v in structure.reeb))

        base = residual_bivector(lie, structure)
        base_poisson = residual_bivector(lie, scaled(1, 0))
        poisson = residual_bivector(lie, scaled(s, 0))
        full = residual_bivector(lie, scaled(s, t))
        for key, value in base.items():
            assert normalize(poisson[key] - s ** 2 * base_poisson[key]) == 0
            assert normalize(full[key] - poisson[key] - s * t * (value - base_poisson[key])) == 0

        reeb = residual_reeb(lie, structure)
        scaled_reeb = residual_reeb(lie, scaled(s, t))
        assert all(normalize(scaled_reeb[key] - s * t * v) == 0 for key, v in reeb.items())


class TestVerifyFamily:
    """Tests for single-structure verification."""

    def test_non_solution_fails_with_detail(self, algebra, a2_non_solution, tester):
        report = verify_family(algebra("A2"), a2_non_solution, tester, name="candidate")
        record = report.get("candidate")
        assert record.verdict is Verdict.FAIL
        assert "reeb (1,2): 1" in record.detail
        assert "reeb (2,1): -1" in record.detail

    def test_solution_passes(self, algebra, tester):
        structure = JacobiPair.from_components(2, {"12": l12}, [1, 0])
        assert verify_family(algebra("A2"), structure, tester).verdict is Verdict.PASS


class TestVerifyRow:
    """Tests for row and table verification."""

    def test_row_records_family_and_classes(self, repository, tester):
        row, _ = repository.find_structure("III.2")
        report = verify_row(repository.get_algebra("III"), row, tester)
        assert [r.name for r in report.records] == ["family III.2", "class III.2.a", "class III.2.b"]
        assert report.verdict is Verdict.PASS

    def test_flags_become_notes(self, repository, tester):
        row, _ = repository.find_structure("III.1")
        report = verify_row(repository.get_algebra("III"), row, tester)
        assert any(note.startswith("III.1: E^1") for note in report.notes)

    def test_parametric_rows_hold_symbolically(self, repository, tester):
        report = verify_table("VIa", repository, tester)
        assert report.verdict is Verdict.PASS
        assert report.get("family VIa.1") is not None

    @pytest.mark.parametrize("name", ["A1", "A2", "I", "II", "III", "IV", "V", "VI0", "VII0", "VIIa"])
    def test_catalogued_rows_solve_the_equations(self, name, repository, tester):
        report = verify_table(name, repository, tester)
        assert report.passed, [r for r in report.records if not r.ok]

    def test_algebras_without_rows(self, repository, tester):
        report = verify_table("VIII", repository, tester)
        assert report.get("rows VIII").detail == ["no catalogued rows"]

    def test_table_for_iii(self, repository, tester):
        report = verify_table("III", repository, tester)
        assert report.command == "verify-table --algebra III"
        assert len([r for r in report.records if r.name.startswith("family")]) == 3
        assert len([r for r in report.records if r.name.startswith("class")]) == 5

    def test_unknown_algebra(self, repository):
        with pytest.raises(UnknownAlgebra):
            verify_table("X", repository)

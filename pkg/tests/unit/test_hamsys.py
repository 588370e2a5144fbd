"""
Unit tests for Hamiltonian vector fields, Jacobi brackets and closure.
"""

import pytest
import sympy

from jacobilie.errors import DependentGenerators, DimensionMismatch, UnknownExample
from jacobilie.group_geom import lift_to_group
from jacobilie.hamsys import (
    check_example_manifold,
    closure_check,
    commutator,
    find_hamiltonian,
    hamiltonian_of,
    hamiltonian_vf,
    jacobi_bracket,
    jacobi_identity_check,
    lie_system_of,
    reeb_derivative,
    verify_example,
)
from jacobilie.models import JacobiPair, Verdict
from jacobilie.models.geometry import VectorField
from jacobilie.symexpr import parse
from jacobilie.symexpr.symbols import t, x1, x2, x3


@pytest.fixture
def lifted_ii(repository):
    """Λ = x3 ∂1∧∂3 + ∂2∧∂3, E = ∂1 on the Heisenberg group."""
    structure = JacobiPair.from_components(3, {"23": 1}, [1, 0, 0])
    return lift_to_group(structure, repository.get_vielbein("II"))


class TestFields:
    """Tests for X_f, E(f) and the Jacobi bracket."""

    def test_hamiltonian_vector_field(self, lifted_ii):
        field = hamiltonian_vf(lifted_ii, x2)
        assert field.components == (x2, 0, 1)

    def test_constant_function_gives_reeb_field(self, lifted_ii):
        assert hamiltonian_vf(lifted_ii, 1).components == lifted_ii.reeb

    def test_reeb_derivative(self, lifted_ii):
        assert reeb_derivative(lifted_ii, x1 * x2) == x2

    def test_bracket_with_constant(self, lifted_ii):
        assert jacobi_bracket(lifted_ii, x1, 1) == -1

    def test_printed_bracket_relation(self, lifted_ii):
        f3 = parse("(x2*x3 + x1)/(2*x2**2)")
        assert jacobi_bracket(lifted_ii, x2, f3) == parse("1/x2")

    def test_jacobi_identity(self, lifted_ii):
        assert jacobi_identity_check(lifted_ii, x1, x2 * x3, x3 ** 2) == 0

    def test_commutator(self):
        result = commutator(VectorField(components=[1, 0]), VectorField(components=[0, x1]))
        assert result.components == (0, 1)

    def test_commutator_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            commutator(VectorField(components=[1, 0]), VectorField(components=[0, 0, 1]))

    def test_hamiltonian_of(self, lifted_ii):
        field = VectorField(components=[x2, 0, 1])
        assert hamiltonian_of(lifted_ii, field, ["1/x2", "x2", "x3"]) == x2
        assert hamiltonian_of(lifted_ii, field, ["x3"]) is None


class TestClosure:
    """Tests for the Vessiot-Guldberg closure check."""

    def test_heisenberg_realization(self, repository, tester):
        fields = [VectorField(components=c) for c in ([1, 0], [0, 1], [0, x1])]
        report = closure_check(fields, tester, repository)
        assert report.closed
        assert report.coefficient(1, 3, 2) == 1
        assert report.coefficient(3, 1, 2) == -1
        assert report.coefficient(1, 2, 3) == 0
        assert report.matched_algebra == "II"
        assert report.relabeling is not None
        assert report.bracket_lines() == ["[X1, X3] = X2"]

    def test_dependent_generators(self, tester):
        fields = [VectorField(components=[1, 0]), VectorField(components=[2, 0])]
        with pytest.raises(DependentGenerators):
            closure_check(fields, tester)

    def test_no_generators(self, tester):
        with pytest.raises(DependentGenerators, match="No generators"):
            closure_check([], tester)

    def test_open_family(self, repository, tester):
        fields = [VectorField(components=[1, 0]), VectorField(components=[0, x1 ** 2])]
        report = closure_check(fields, tester, repository)
        assert not report.closed
        assert report.unexpressed == ((1, 2),)
        assert report.matched_algebra is None
        assert report.to_dict()["unexpressed"] == [[1, 2]]

    def test_fewer_generators_than_coordinates(self, repository, tester):
        fields = [VectorField(components=[0, sympy.exp(x1), 0]), VectorField(components=[-1, 0, 0])]
        report = closure_check(fields, tester, repository)
        assert report.closed
        assert report.coefficient(1, 2, 1) == 1
        assert report.coefficient(1, 2, 2) == 0
        assert report.matched_algebra == "A2"


class TestExamples:
    """Tests for the catalogued Jacobi-Lie Hamiltonian systems."""

    def test_heisenberg_example(self, repository, tester):
        report = verify_example(2, repository, tester)
        assert report.exit_code == 0
        assert report.get("lift-matches-print").verdict is Verdict.PASS
        assert report.get("closure").verdict is Verdict.PASS
        assert report.get("matched-algebra").detail == ["II"]
        assert report.data["fields"][1] == ["x2", "0", "1"]

    @pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 6])
    def test_every_example_has_no_failure(self, number, repository, tester):
        report = verify_example(number, repository, tester)
        assert report.exit_code == 0, [r.name for r in report.records if r.verdict is Verdict.FAIL]
        assert report.get("closure").verdict is Verdict.PASS

    def test_example_with_secondary_class(self, repository, tester):
        report = verify_example(3, repository, tester)
        assert report.exit_code == 0
        assert report.get("secondary 1 no-basis").verdict is Verdict.PASS

    def test_check_example_manifold(self, repository, tester):
        report = check_example_manifold(3, repository, tester)
        assert report.passed
        assert report.get("secondary 1 formulations-agree").verdict is Verdict.PASS

    def test_lie_system(self, repository, tester):
        system = lie_system_of(2, repository, tester)
        assert system.closed
        assert system.matched_algebra == "II"
        assert system.hamiltonian_verified
        assert "a1(t)" in system.to_dict()["hamiltonian"]

    def test_find_hamiltonian(self, repository, tester):
        field = VectorField(components=[x2, 0, 1])
        assert find_hamiltonian(2, field, repository=repository, tester=tester) == x2

    def test_unknown_example(self, repository):
        with pytest.raises(UnknownExample):
            verify_example(99, repository)

    def test_time_dependent_field(self, repository, tester):
        system = lie_system_of(2, repository, tester)
        assert len(system.time_dependent_field) == 3
        a3 = sympy.Function("a3")(t)
        assert sympy.simplify(system.time_dependent_field[1] + a3 / (2 * x2)) == 0

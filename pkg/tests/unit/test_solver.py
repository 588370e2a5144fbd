"""
Unit tests for the zero-dimensional polynomial solver.
"""

import pytest
import sympy

from jacobilie.errors import NotPolynomial, PositiveDimensional
from jacobilie.jacobi_alg import is_consistent, residual_polynomials, solve_determined
from jacobilie.jacobi_alg.grid import generic_structure
from jacobilie.symexpr.symbols import e2, e3, l12, l13, x1


class TestSolveDetermined:
    """Tests for solve_determined."""

    def test_rational_solutions_sorted(self):
        result = solve_determined([l12 - 1, l13 ** 2 - 4], [l13, l12])
        assert result.unknowns == (l12, l13)
        assert result.solutions == ({l12: 1, l13: -2}, {l12: 1, l13: 2})
        assert result.complete

    def test_radical_solutions(self):
        result = solve_determined([l12 ** 2 - 2, l13 - l12], [l12, l13])
        values = [s[l12] for s in result.solutions]
        assert values == [-sympy.sqrt(2), sympy.sqrt(2)]
        assert all(s[l13] == s[l12] for s in result.solutions)

    def test_rationals_precede_radicals(self):
        result = solve_determined([(l12 - 3) * (l12 ** 2 - 2)], [l12])
        assert [s[l12] for s in result.solutions] == [3, -sympy.sqrt(2), sympy.sqrt(2)]

    def test_no_real_solutions(self):
        assert solve_determined([l12 ** 2 + 1], [l12]).solutions == ()

    def test_inconsistent_system(self):
        assert solve_determined([l12 - 1, l12 - 2], [l12]).solutions == ()

    def test_nonzero_guard_drops_solutions(self):
        result = solve_determined([l12 ** 2 - l12], [l12], nonzero=[l12])
        assert result.solutions == ({l12: 1},)

    def test_positive_dimensional(self):
        with pytest.raises(PositiveDimensional):
            solve_determined([l12 - l13], [l12, l13])

    def test_unconstrained_unknowns(self):
        with pytest.raises(PositiveDimensional, match="No equations"):
            solve_determined([], [l12])

    def test_no_unknowns(self):
        assert solve_determined([], []).solutions == ({},)
        assert solve_determined([sympy.Integer(1)], []).solutions == ()

    def test_extra_symbols_are_rejected(self):
        with pytest.raises(NotPolynomial, match="x1"):
            solve_determined([l12 - x1], [l12])

    def test_transcendental_input_is_rejected(self):
        with pytest.raises(NotPolynomial, match="Transcendental"):
            solve_determined([sympy.exp(l12) - 1], [l12])

    def test_cubic_factor_marks_incomplete(self):
        result = solve_determined([(l12 - 1) * (l12 ** 3 - 2)], [l12])
        assert not result.complete
        assert result.solutions == ({l12: 1},)

    def test_to_dict(self):
        data = solve_determined([l12 - sympy.Rational(1, 2)], [l12]).to_dict()
        assert data == {"unknowns": ["l12"], "solutions": [{"l12": "1/2"}], "complete": True}

    def test_reeb_vector_of_iii_member(self, algebra):
        """With Λ fixed to (0, 2, 5) and E^1 = 0 on III, E is forced to (0, -2, 2)."""
        structure = generic_structure(3).substitute({"l12": 0, "l13": 2, "l23": 5, "e1": 0})
        polys = residual_polynomials(algebra("III"), structure)
        result = solve_determined(polys, structure.parameters)
        assert result.solutions == ({e2: -2, e3: 2},)


class TestIsConsistent:
    """Tests for the Gröbner consistency test."""

    def test_consistent(self):
        assert is_consistent([l12 - l13], [l12, l13])

    def test_inconsistent(self):
        assert not is_consistent([l12 - 1, l12 - 2], [l12])

    def test_nonzero_guard(self):
        assert not is_consistent([l12 * l13], [l12, l13], nonzero=[l12, l13])
        assert is_consistent([l12 * l13], [l12, l13], nonzero=[l12])

    def test_zero_guard(self):
        assert not is_consistent([], [], nonzero=[sympy.Integer(0)])

    def test_complex_solutions_count(self):
        """Consistency is decided over the complex numbers."""
        assert is_consistent([l12 ** 2 + 1], [l12])

"""
Algebra-level Jacobi structures: residual equations, table verification,
automorphism equivalence, the zero-dimensional solver and grid enumeration.
"""

from jacobilie.jacobi_alg.equivalence import (
    EquivalenceResult,
    are_equivalent,
    class_representatives_search,
    reduction_check,
    transform,
)
from jacobilie.jacobi_alg.grid import generic_structure, grid_enumerate, grid_solutions, matches_family
from jacobilie.jacobi_alg.residuals import residual_bivector, residual_polynomials, residual_reeb
from jacobilie.jacobi_alg.solver import SolveResult, is_consistent, solve_determined
from jacobilie.jacobi_alg.verification import verify_family, verify_row, verify_table

__all__ = [
    "EquivalenceResult",
    "are_equivalent",
    "class_representatives_search",
    "reduction_check",
    "transform",
    "generic_structure",
    "grid_enumerate",
    "grid_solutions",
    "matches_family",
    "residual_bivector",
    "residual_polynomials",
    "residual_reeb",
    "SolveResult",
    "is_consistent",
    "solve_determined",
    "verify_family",
    "verify_row",
    "verify_table",
]

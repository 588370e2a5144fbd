"""
Automorphism families and the automorphism test.

A matrix A with entries A[a, k] = A_a^k is an automorphism when

    sum_{k,l} A_a^k A_b^l f_kl^m = sum_c f_ab^c A_c^m

for all a, b, m and det A is not identically zero.
"""

import logging
import random
from itertools import product
from typing import List, Optional, Tuple

import sympy

from jacobilie.errors import DimensionMismatch, JacobiError
from jacobilie.liealg.structure import adjoint
from jacobilie.loaders import default_repository
from jacobilie.models import LieAlgebra, Report, verdict_for, weakest
from jacobilie.models.automorphism import AutomorphismBranch, AutomorphismFamily
from jacobilie.repository import ICatalogRepository
from jacobilie.symexpr import ZeroTester, normalize, substitute, to_text

logger = logging.getLogger(__name__)

MAX_DRAWS = 1000


def automorphism_family(
    algebra: LieAlgebra,
    repository: Optional[ICatalogRepository] = None,
) -> AutomorphismFamily:
    """Catalogued automorphism family of an algebra."""
    return (repository or default_repository()).get_automorphism_family(algebra.name)


def automorphism_defects(algebra: LieAlgebra, matrix) -> List[Tuple[int, int, int, sympy.Expr]]:
    """
    Components of the automorphism equation, 0-based (a, b, m, lhs - rhs).

    Raises:
        DimensionMismatch: If the matrix size differs from the algebra dimension
    """
    A = sympy.ImmutableMatrix(matrix)
    n = algebra.dim
    if A.shape != (n, n):
        raise DimensionMismatch(f"{A.rows}x{A.cols} matrix for {n}-dimensional algebra {algebra.name}")
    defects = []
    for a, b, m in product(range(n), repeat=3):
        lhs = sum(A[a, k] * A[b, l] * algebra.f(k, l, m) for k in range(n) for l in range(n))
        rhs = sum(algebra.f(a, b, c) * A[c, m] for c in range(n))
        defects.append((a, b, m, lhs - rhs))
    return defects


def is_automorphism(algebra: LieAlgebra, matrix, tester: Optional[ZeroTester] = None) -> bool:
    """True when the matrix is invertible and preserves the brackets."""
    tester = tester or ZeroTester.seeded()
    A = sympy.ImmutableMatrix(matrix)
    defects = automorphism_defects(algebra, A)
    if tester.is_zero(A.det()):
        return False
    return all(tester.is_zero(d) for *_, d in defects)


def matrix_identities_check(
    algebra: LieAlgebra,
    matrix,
    tester: Optional[ZeroTester] = None,
) -> Report:
    """
    Check the automorphism condition in adjoint-matrix form.

    A 𝒴^m A^T = 𝒴^c A_c^m for every m, and sum_l A_b^l (A χ_l) = χ_b A for
    every b. Both hold exactly when the component form holds.
    """
    tester = tester or ZeroTester.seeded()
    A = sympy.ImmutableMatrix(matrix)
    n = algebra.dim
    if A.shape != (n, n):
        raise DimensionMismatch(f"{A.rows}x{A.cols} matrix for {n}-dimensional algebra {algebra.name}")
    rep = adjoint(algebra)
    report = Report(command=f"matrix-identities --algebra {algebra.name}")

    for m in range(n):
        lhs = A * rep.upsilon[m] * A.T
        rhs = sum((rep.upsilon[c] * A[c, m] for c in range(n)), sympy.zeros(n, n))
        _add_matrix_check(report, f"upsilon-{m + 1}", lhs - rhs, tester)

    for b in range(n):
        lhs = sum((A[b, l] * (A * rep.chi[l]) for l in range(n)), sympy.zeros(n, n))
        rhs = rep.chi[b] * A
        _add_matrix_check(report, f"chi-{b + 1}", lhs - rhs, tester)

    return report


def _add_matrix_check(report: Report, name: str, difference, tester: ZeroTester) -> None:
    verdicts = []
    detail = []
    for i, j in product(range(difference.rows), range(difference.cols)):
        result = tester.test(difference[i, j])
        verdicts.append(verdict_for(result))
        if not result.is_zero:
            detail.append(f"({i + 1},{j + 1}): {to_text(normalize(difference[i, j]))}")
    report.add(name, weakest(verdicts), *detail)


def branch_admits(branch: AutomorphismBranch, bindings) -> bool:
    """True when every non-vanishing condition holds at the bindings."""
    matrix = branch.matrix.subs(bindings)
    if normalize(matrix.det()) == 0:
        return False
    return all(substitute(e, bindings) != 0 for e in branch.nonzero)


def random_instance(
    family: AutomorphismFamily,
    rng: random.Random,
    branch: int = 0,
    bound: int = 5,
) -> sympy.ImmutableMatrix:
    """
    Draw a member of a parametric family with small rational entries.

    Raises:
        UnsupportedAlgebra: For constraint-only families
        JacobiError: If no admissible draw is found
    """
    family.require_parametric()
    chosen = family.branches[branch]
    for _ in range(MAX_DRAWS):
        bindings = {
            s: sympy.Rational(rng.randint(-bound, bound), rng.randint(1, 3))
            for s in chosen.parameters
        }
        if branch_admits(chosen, bindings):
            return sympy.ImmutableMatrix(chosen.matrix.subs(bindings))
    raise JacobiError(f"No admissible automorphism of {family.algebra} found in {MAX_DRAWS} draws")

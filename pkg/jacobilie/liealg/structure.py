"""
Structure-constant checks and the adjoint representation.

Index convention: f[a][b][c] is f_ab^c with [X_a, X_b] = f_ab^c X_c.
The adjoint matrices are (χ_a)_b^c = -f_ab^c and (𝒴^c)_ab = -f_ab^c.
Frame constants c_ab^c = -f_ab^c are the constants that appear in the
Jacobi equations and in the commutators of the left-invariant frame.
"""

import logging
from itertools import product
from typing import List, Optional, Tuple

import sympy
from pydantic import BaseModel, ConfigDict

from jacobilie.models import LieAlgebra, Report, verdict_for, weakest
from jacobilie.symexpr import ZeroTester, normalize, to_text

logger = logging.getLogger(__name__)

FrameConstants = Tuple[Tuple[Tuple[sympy.Expr, ...], ...], ...]


class AdjointRepresentation(BaseModel):
    """
    Adjoint matrices of an algebra.

    Attributes:
        chi: chi[a][b, c] = -f_ab^c
        upsilon: upsilon[c][a, b] = -f_ab^c
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    chi: Tuple[sympy.ImmutableMatrix, ...]
    upsilon: Tuple[sympy.ImmutableMatrix, ...]


def check_structure(algebra: LieAlgebra, tester: Optional[ZeroTester] = None) -> Report:
    """
    Verify antisymmetry and the Jacobi identity of the structure constants.

    Failing index tuples are listed 1-based in the record details.
    """
    tester = tester or ZeroTester.seeded()
    n = algebra.dim
    report = Report(command=f"check-structure --algebra {algebra.name}")

    failures: List[str] = []
    verdicts = []
    for a, b, c in product(range(n), repeat=3):
        result = tester.test(algebra.f(a, b, c) + algebra.f(b, a, c))
        verdicts.append(verdict_for(result))
        if not result.is_zero:
            failures.append(f"f_{a + 1}{b + 1}^{c + 1} + f_{b + 1}{a + 1}^{c + 1} != 0")
    report.add("antisymmetry", weakest(verdicts), *failures)

    failures = []
    verdicts = []
    for a, b, c, e in product(range(n), repeat=4):
        total = sum(
            algebra.f(a, b, d) * algebra.f(d, c, e)
            + algebra.f(b, c, d) * algebra.f(d, a, e)
            + algebra.f(c, a, d) * algebra.f(d, b, e)
            for d in range(n)
        )
        result = tester.test(total)
        verdicts.append(verdict_for(result))
        if not result.is_zero:
            failures.append(
                f"Jacobi ({a + 1},{b + 1},{c + 1}) component {e + 1}: {to_text(normalize(total))}"
            )
    report.add("jacobi-identity", weakest(verdicts), *failures)

    logger.debug("check_structure %s: %s", algebra.name, report.verdict.value)
    return report


def frame_constants(algebra: LieAlgebra) -> FrameConstants:
    """c[a][b][c] = -f_ab^c."""
    n = algebra.dim
    return tuple(
        tuple(tuple(normalize(-algebra.f(a, b, c)) for c in range(n)) for b in range(n))
        for a in range(n)
    )


def adjoint(algebra: LieAlgebra) -> AdjointRepresentation:
    """Build the adjoint matrices chi_a and upsilon^c."""
    n = algebra.dim
    chi = tuple(
        sympy.ImmutableMatrix(n, n, lambda b, c, a=a: normalize(-algebra.f(a, b, c)))
        for a in range(n)
    )
    upsilon = tuple(
        sympy.ImmutableMatrix(n, n, lambda a, b, c=c: normalize(-algebra.f(a, b, c)))
        for c in range(n)
    )
    return AdjointRepresentation(chi=chi, upsilon=upsilon)

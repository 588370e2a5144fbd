"""
Algebra-level Jacobi equations.

With frame constants c_ab^c = -f_ab^c, a pair (Λ, E) of constant
components defines a left-invariant Jacobi structure exactly when

    R(f,h,e) = c_bc^f Λ^{hb} Λ^{ce} + c_bd^e Λ^{hb} Λ^{fd} + c_ba^h Λ^{eb} Λ^{af}
               + E^f Λ^{eh} + E^e Λ^{hf} + E^h Λ^{fe}

and

    M(d,e) = c_ac^d E^a Λ^{ce} + c_ab^e E^a Λ^{db}

vanish for all indices (sums over repeated indices).
"""

from itertools import product
from typing import Dict, List, Tuple

import sympy

from jacobilie.errors import DimensionMismatch
from jacobilie.liealg import frame_constants
from jacobilie.models import JacobiPair, LieAlgebra
from jacobilie.symexpr import normalize

BivectorResidual = Dict[Tuple[int, int, int], sympy.Expr]
ReebResidual = Dict[Tuple[int, int], sympy.Expr]


def _check_dims(algebra: LieAlgebra, structure: JacobiPair) -> None:
    if algebra.dim != structure.dim:
        raise DimensionMismatch(
            f"{structure.dim}-dimensional structure on {algebra.dim}-dimensional algebra {algebra.name}"
        )


def residual_bivector(algebra: LieAlgebra, structure: JacobiPair) -> BivectorResidual:
    """All components R(f,h,e), 0-based, in canonical form."""
    _check_dims(algebra, structure)
    c = frame_constants(algebra)
    L = structure.lam
    E = structure.reeb
    n = algebra.dim
    result = {}
    for f, h, e in product(range(n), repeat=3):
        total = E[f] * L[e, h] + E[e] * L[h, f] + E[h] * L[f, e]
        for i, j in product(range(n), repeat=2):
            total += (
                c[i][j][f] * L[h, i] * L[j, e]
                + c[i][j][e] * L[h, i] * L[f, j]
                + c[i][j][h] * L[e, i] * L[j, f]
            )
        result[(f, h, e)] = normalize(total)
    return result


def residual_reeb(algebra: LieAlgebra, structure: JacobiPair) -> ReebResidual:
    """All components M(d,e), 0-based, in canonical form."""
    _check_dims(algebra, structure)
    c = frame_constants(algebra)
    L = structure.lam
    E = structure.reeb
    n = algebra.dim
    result = {}
    for d, e in product(range(n), repeat=2):
        total = sympy.Integer(0)
        for i, j in product(range(n), repeat=2):
            total += c[i][j][d] * E[i] * L[j, e] + c[i][j][e] * E[i] * L[d, j]
        result[(d, e)] = normalize(total)
    return result


def residual_polynomials(algebra: LieAlgebra, structure: JacobiPair) -> List[sympy.Expr]:
    """
    Distinct non-zero residual numerators, up to sign, in a stable order.

    These are the polynomial equations cut out by the Jacobi conditions.
    """
    seen = set()
    polys = []
    for value in list(residual_bivector(algebra, structure).values()) + list(
        residual_reeb(algebra, structure).values()
    ):
        num = sympy.expand(sympy.fraction(value)[0])
        if num == 0 or num in seen or sympy.expand(-num) in seen:
            continue
        seen.add(num)
        polys.append(num)
    return polys

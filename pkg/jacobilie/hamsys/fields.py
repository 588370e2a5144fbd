"""
Hamiltonian vector fields and the Jacobi bracket of a group-level structure.

    X_f^mu  = Λ^{nu mu} ∂_nu f + f E^mu
    {f, g}  = Λ^{mu nu} ∂_mu f ∂_nu g + f E(g) - g E(f)
"""

from typing import Any, Optional, Sequence

import sympy

from jacobilie.errors import DimensionMismatch
from jacobilie.models import JacobiPair
from jacobilie.models.geometry import VectorField
from jacobilie.symexpr import ZeroTester, differentiate, normalize, to_expr
from jacobilie.symexpr.symbols import coordinates


def _gradient(f: sympy.Expr, dim: int):
    return [differentiate(f, x) for x in coordinates(dim)]


def hamiltonian_vf(structure: JacobiPair, f: Any) -> VectorField:
    """Hamiltonian vector field of f."""
    n = structure.dim
    f = to_expr(f)
    df = _gradient(f, n)
    L = structure.lam
    E = structure.reeb
    return VectorField(
        components=[sum(L[v, m] * df[v] for v in range(n)) + f * E[m] for m in range(n)]
    )


def reeb_derivative(structure: JacobiPair, f: Any) -> sympy.Expr:
    """E(f) = E^mu ∂_mu f."""
    df = _gradient(to_expr(f), structure.dim)
    return normalize(sum(e * d for e, d in zip(structure.reeb, df)))


def jacobi_bracket(structure: JacobiPair, f: Any, g: Any) -> sympy.Expr:
    """Jacobi bracket {f, g}."""
    n = structure.dim
    f = to_expr(f)
    g = to_expr(g)
    df = _gradient(f, n)
    dg = _gradient(g, n)
    L = structure.lam
    total = sum(L[m, v] * df[m] * dg[v] for m in range(n) for v in range(n))
    total += f * reeb_derivative(structure, g) - g * reeb_derivative(structure, f)
    return normalize(total)


def jacobi_identity_check(structure: JacobiPair, f: Any, g: Any, h: Any) -> sympy.Expr:
    """Cyclic sum {f,{g,h}} + {g,{h,f}} + {h,{f,g}}; vanishes on Jacobi manifolds."""
    return normalize(
        jacobi_bracket(structure, f, jacobi_bracket(structure, g, h))
        + jacobi_bracket(structure, g, jacobi_bracket(structure, h, f))
        + jacobi_bracket(structure, h, jacobi_bracket(structure, f, g))
    )


def commutator(x: VectorField, y: VectorField) -> VectorField:
    """
    Lie bracket [X, Y]^mu = X^nu ∂_nu Y^mu - Y^nu ∂_nu X^mu.

    Raises:
        DimensionMismatch: If the fields live in different dimensions
    """
    if x.dim != y.dim:
        raise DimensionMismatch(f"Fields of dimension {x.dim} and {y.dim}")
    coords = coordinates(x.dim)
    return VectorField(
        components=[
            sum(
                x[v] * differentiate(y[m], coords[v]) - y[v] * differentiate(x[m], coords[v])
                for v in range(x.dim)
            )
            for m in range(x.dim)
        ]
    )


def hamiltonian_of(
    structure: JacobiPair,
    field: VectorField,
    candidates: Sequence[Any],
    tester: Optional[ZeroTester] = None,
) -> Optional[sympy.Expr]:
    """First candidate whose Hamiltonian vector field equals the field, if any."""
    tester = tester or ZeroTester.seeded()
    for candidate in candidates:
        computed = hamiltonian_vf(structure, candidate)
        if computed.dim != field.dim:
            continue
        if all(tester.is_zero(u - v) for u, v in zip(computed.components, field.components)):
            return normalize(candidate)
    return None

"""
Schouten-Nijenhuis brackets and the wedge product in coordinates.

The bivector self-bracket is normalized so that a Jacobi manifold satisfies
[[Λ, Λ]] = 2 E ∧ Λ with the wedge below, e.g. the lifted II structure has
[[Λ, Λ]] = 2 ∂1∧∂2∧∂3 = 2 E∧Λ.
"""

from typing import Tuple

import sympy

from jacobilie.errors import DimensionMismatch, DimensionUnsupported
from jacobilie.models.geometry import Multivector
from jacobilie.symexpr import differentiate
from jacobilie.symexpr.symbols import coordinates


def _require(multivector: Multivector, degree: int, name: str) -> None:
    if multivector.degree != degree:
        raise ValueError(f"{name} must have degree {degree}, got {multivector.degree}")


def schouten_ll(lam: Multivector) -> Multivector:
    """
    [[Λ, Λ]] with components

        2 (Λ^{ρν} ∂_ρ Λ^{λμ} + Λ^{ρλ} ∂_ρ Λ^{μν} + Λ^{ρμ} ∂_ρ Λ^{νλ})

    Zero in dimension two, where no 3-vectors exist.
    """
    _require(lam, 2, "Λ")
    n = lam.dim
    if n > 3:
        raise DimensionUnsupported(f"Dimension {n} is above 3")
    x = coordinates(n)

    def component(index: Tuple[int, ...]) -> sympy.Expr:
        l, m, v = index
        total = sympy.Integer(0)
        for r in range(n):
            total += (
                lam.component(r, v) * differentiate(lam.component(l, m), x[r])
                + lam.component(r, l) * differentiate(lam.component(m, v), x[r])
                + lam.component(r, m) * differentiate(lam.component(v, l), x[r])
            )
        return 2 * total

    return Multivector.from_function(3, n, component)


def schouten_el(reeb: Multivector, lam: Multivector) -> Multivector:
    """
    [[E, Λ]], the Lie derivative of Λ along E:

        E^ρ ∂_ρ Λ^{μν} - Λ^{ρν} ∂_ρ E^μ - Λ^{μρ} ∂_ρ E^ν
    """
    _require(reeb, 1, "E")
    _require(lam, 2, "Λ")
    if reeb.dim != lam.dim:
        raise DimensionMismatch(f"E has dimension {reeb.dim}, Λ has {lam.dim}")
    n = lam.dim
    x = coordinates(n)

    def component(index: Tuple[int, ...]) -> sympy.Expr:
        m, v = index
        total = sympy.Integer(0)
        for r in range(n):
            total += (
                reeb.component(r) * differentiate(lam.component(m, v), x[r])
                - lam.component(r, v) * differentiate(reeb.component(m), x[r])
                - lam.component(m, r) * differentiate(reeb.component(v), x[r])
            )
        return total

    return Multivector.from_function(2, n, component)


def wedge(reeb: Multivector, lam: Multivector) -> Multivector:
    """
    E ∧ Λ with components E^λ Λ^{μν} + E^μ Λ^{νλ} + E^ν Λ^{λμ}.

    Raises:
        DimensionUnsupported: Outside dimension three
    """
    _require(reeb, 1, "E")
    _require(lam, 2, "Λ")
    if lam.dim != 3 or reeb.dim != 3:
        raise DimensionUnsupported("E ∧ Λ is only defined here in dimension 3")

    def component(index: Tuple[int, ...]) -> sympy.Expr:
        l, m, v = index
        return (
            reeb.component(l) * lam.component(m, v)
            + reeb.component(m) * lam.component(v, l)
            + reeb.component(v) * lam.component(l, m)
        )

    return Multivector.from_function(3, 3, component)

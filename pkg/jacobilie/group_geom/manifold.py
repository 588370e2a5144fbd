"""
Jacobi manifold predicates for group-level structures.

Two formulations are evaluated independently: the Schouten-Nijenhuis
conditions [[Λ,Λ]] = 2E∧Λ, [[E,Λ]] = 0 and the coordinate Jacobi
equations. They must agree.
"""

import logging
from itertools import product
from typing import Dict, Optional, Tuple

import sympy

from jacobilie.group_geom.multivector import schouten_el, schouten_ll, wedge
from jacobilie.models import JacobiPair, Report, Verdict, verdict_for, weakest
from jacobilie.models.geometry import Multivector
from jacobilie.symexpr import ZeroTester, differentiate, normalize, to_text
from jacobilie.symexpr.symbols import coordinates

logger = logging.getLogger(__name__)

CoordinateResiduals = Tuple[Dict[Tuple[int, int, int], sympy.Expr], Dict[Tuple[int, int], sympy.Expr]]


def coordinate_jacobi_residuals(structure: JacobiPair) -> CoordinateResiduals:
    """
    Left sides of the coordinate Jacobi equations, 0-based.

    Degree three, for every (λ, μ, ν):
        Λ^{νρ}∂_ρΛ^{λμ} + Λ^{μρ}∂_ρΛ^{νλ} + Λ^{λρ}∂_ρΛ^{μν}
          + E^λΛ^{μν} + E^μΛ^{νλ} + E^νΛ^{λμ}
    Degree two, for every (μ, ν):
        E^ρ∂_ρΛ^{μν} - Λ^{ρν}∂_ρE^μ - Λ^{μρ}∂_ρE^ν
    """
    n = structure.dim
    x = coordinates(n)
    L = structure.lam
    E = structure.reeb
    dL = {(r, i, j): differentiate(L[i, j], x[r]) for r, i, j in product(range(n), repeat=3)}
    dE = {(r, i): differentiate(E[i], x[r]) for r, i in product(range(n), repeat=2)}

    cubic = {}
    for l, m, v in product(range(n), repeat=3):
        total = E[l] * L[m, v] + E[m] * L[v, l] + E[v] * L[l, m]
        for r in range(n):
            total += L[v, r] * dL[(r, l, m)] + L[m, r] * dL[(r, v, l)] + L[l, r] * dL[(r, m, v)]
        cubic[(l, m, v)] = normalize(total)

    quadratic = {}
    for m, v in product(range(n), repeat=2):
        total = sympy.Integer(0)
        for r in range(n):
            total += E[r] * dL[(r, m, v)] - L[r, v] * dE[(r, m)] - L[m, r] * dE[(r, v)]
        quadratic[(m, v)] = normalize(total)
    return cubic, quadratic


def _label(index: Tuple[int, ...]) -> str:
    return "".join(str(i + 1) for i in index)


def _zero_record(report: Report, name: str, values: Dict[Tuple[int, ...], sympy.Expr], tester: ZeroTester) -> bool:
    verdicts = []
    detail = []
    for index, value in values.items():
        result = tester.test(value)
        verdicts.append(verdict_for(result))
        if not result.is_zero:
            detail.append(f"({_label(index)}): {to_text(normalize(value))}")
    report.add(name, weakest(verdicts), *detail)
    return not detail


def is_jacobi_manifold(structure: JacobiPair, tester: Optional[ZeroTester] = None) -> Report:
    """
    Check both formulations of the Jacobi conditions.

    Records:
        schouten-ll-minus-2-wedge: [[Λ,Λ]] - 2E∧Λ vanishes (vacuous in dimension 2)
        schouten-el: [[E,Λ]] vanishes
        coordinate-bivector / coordinate-reeb: the coordinate equations vanish
        formulations-agree: both formulations give the same answer
    """
    tester = tester or ZeroTester.seeded()
    report = Report(command="check-manifold")
    lam = Multivector.from_bivector(structure.lam)
    reeb = Multivector.from_vector(structure.reeb)

    if structure.dim == 3:
        ll = schouten_ll(lam)
        e_wedge_l = wedge(reeb, lam)
        difference = {k: ll.components[k] - 2 * e_wedge_l.components[k] for k in ll.components}
        schouten_ok = _zero_record(report, "schouten-ll-minus-2-wedge", difference, tester)
    else:
        report.add("schouten-ll-minus-2-wedge", Verdict.PASS, "vacuous in dimension 2")
        schouten_ok = True
    schouten_ok = _zero_record(report, "schouten-el", schouten_el(reeb, lam).components, tester) and schouten_ok

    cubic, quadratic = coordinate_jacobi_residuals(structure)
    coordinate_ok = _zero_record(report, "coordinate-bivector", cubic, tester)
    coordinate_ok = _zero_record(report, "coordinate-reeb", quadratic, tester) and coordinate_ok

    if schouten_ok == coordinate_ok:
        report.add("formulations-agree", Verdict.PASS)
    else:
        report.add(
            "formulations-agree",
            Verdict.FAIL,
            f"schouten {'zero' if schouten_ok else 'nonzero'}, coordinate {'zero' if coordinate_ok else 'nonzero'}",
        )
    return report

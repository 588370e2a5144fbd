"""Vielbein catalog and the Maurer-Cartan check."""

import logging
from itertools import product
from typing import Optional

import sympy

from jacobilie.errors import DimensionMismatch
from jacobilie.liealg import frame_constants
from jacobilie.loaders import default_repository
from jacobilie.models import LieAlgebra, Report, verdict_for, weakest
from jacobilie.models.geometry import Vielbein
from jacobilie.repository import ICatalogRepository
from jacobilie.symexpr import ZeroTester, differentiate, normalize, to_text

logger = logging.getLogger(__name__)


def vielbein_catalog(group: str, repository: Optional[ICatalogRepository] = None) -> Vielbein:
    """
    Printed frame of a catalogued group.

    Raises:
        UnknownGroup: If no vielbein is catalogued for the group
    """
    return (repository or default_repository()).get_vielbein(group)


def maurer_cartan_constants(vielbein: Vielbein):
    """
    Frame constants recovered from the vielbein:

        c_ab^c = e^c_nu (e_a^mu d_mu e_b^nu - e_b^mu d_mu e_a^nu)

    Returned as nested tuples c[a][b][c], 0-based.
    """
    n = vielbein.dim
    x = vielbein.coordinates
    inv_e = vielbein.inv_e
    e = vielbein.e
    derivative = {
        (mu, nu, b): differentiate(inv_e[nu, b], x[mu])
        for mu, nu, b in product(range(n), repeat=3)
    }

    def constant(a: int, b: int, c: int) -> sympy.Expr:
        total = sympy.Integer(0)
        for nu in range(n):
            bracket = sum(
                inv_e[mu, a] * derivative[(mu, nu, b)] - inv_e[mu, b] * derivative[(mu, nu, a)]
                for mu in range(n)
            )
            total += e[c, nu] * bracket
        return normalize(total)

    return tuple(
        tuple(tuple(constant(a, b, c) for c in range(n)) for b in range(n))
        for a in range(n)
    )


def maurer_cartan_check(
    vielbein: Vielbein,
    algebra: LieAlgebra,
    tester: Optional[ZeroTester] = None,
) -> Report:
    """
    Compare the vielbein's Maurer-Cartan constants with the algebra.

    Records:
        coframe-inverse: e * inv_e is the identity
        maurer-cartan: every recovered constant equals the algebra's frame constant

    Raises:
        DimensionMismatch: If the group and algebra dimensions differ
    """
    if vielbein.dim != algebra.dim:
        raise DimensionMismatch(
            f"{vielbein.dim}-dimensional group {vielbein.group} against "
            f"{algebra.dim}-dimensional algebra {algebra.name}"
        )
    tester = tester or ZeroTester.seeded()
    report = Report(command=f"maurer-cartan {vielbein.group} {algebra.name}")
    n = algebra.dim

    product_matrix = vielbein.e * vielbein.inv_e
    results = [
        tester.test(product_matrix[i, j] - (1 if i == j else 0))
        for i, j in product(range(n), repeat=2)
    ]
    report.add("coframe-inverse", weakest([verdict_for(r) for r in results]))

    computed = maurer_cartan_constants(vielbein)
    expected = frame_constants(algebra)
    verdicts = []
    detail = []
    for a, b, c in product(range(n), repeat=3):
        result = tester.test(computed[a][b][c] - expected[a][b][c])
        verdicts.append(verdict_for(result))
        if not result.is_zero:
            detail.append(
                f"c_({a + 1}{b + 1})^{c + 1}: computed {to_text(computed[a][b][c])}, "
                f"expected {to_text(expected[a][b][c])}"
            )
    report.add("maurer-cartan", weakest(verdicts), *detail)
    logger.debug("Maurer-Cartan %s/%s: %s", vielbein.group, algebra.name, report.verdict.value)
    return report

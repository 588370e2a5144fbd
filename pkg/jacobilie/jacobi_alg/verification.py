"""Verification of table families and class representatives."""

import logging
from typing import Optional

from jacobilie.jacobi_alg.residuals import residual_bivector, residual_reeb
from jacobilie.loaders import default_repository
from jacobilie.models import JacobiPair, LieAlgebra, Report, TableRow, Verdict, verdict_for, weakest
from jacobilie.repository import ICatalogRepository
from jacobilie.symexpr import ZeroTester, to_text

logger = logging.getLogger(__name__)


def verify_family(
    algebra: LieAlgebra,
    structure: JacobiPair,
    tester: Optional[ZeroTester] = None,
    name: str = "family",
) -> Report:
    """
    Check that every residual component vanishes identically.

    Non-zero components are reported 1-based with their canonical value.
    """
    tester = tester or ZeroTester.seeded()
    report = Report(command=f"verify-family --algebra {algebra.name}")
    verdicts = []
    detail = []
    for (f, h, e), value in residual_bivector(algebra, structure).items():
        result = tester.test(value)
        verdicts.append(verdict_for(result))
        if not result.is_zero:
            detail.append(f"bivector ({f + 1},{h + 1},{e + 1}): {to_text(value)}")
    for (d, e), value in residual_reeb(algebra, structure).items():
        result = tester.test(value)
        verdicts.append(verdict_for(result))
        if not result.is_zero:
            detail.append(f"reeb ({d + 1},{e + 1}): {to_text(value)}")
    report.add(name, weakest(verdicts), *detail)
    return report


def verify_row(algebra: LieAlgebra, row: TableRow, tester: Optional[ZeroTester] = None) -> Report:
    """Verify a row's family and each of its printed classes."""
    tester = tester or ZeroTester.seeded()
    if algebra.is_parametric:
        logger.debug("Verifying %s symbolically in %s", row.id, algebra.parameter)
    report = Report(command=f"verify-row {row.id}")
    report.extend(verify_family(algebra, row.family, tester, name=f"family {row.id}"))
    for cls in row.classes:
        report.extend(verify_family(algebra, cls.structure, tester, name=f"class {cls.id}"))
    for flag in row.flags:
        report.notes.append(f"{row.id}: {flag}")
    return report


def verify_table(
    algebra_name: Optional[str] = None,
    repository: Optional[ICatalogRepository] = None,
    tester: Optional[ZeroTester] = None,
) -> Report:
    """
    Verify every catalogued row (of one algebra, or of all algebras).

    Raises:
        UnknownAlgebra: If algebra_name is not catalogued
    """
    repository = repository or default_repository()
    tester = tester or ZeroTester.seeded()
    command = "verify-table" + (f" --algebra {algebra_name}" if algebra_name else "")
    report = Report(command=command)

    algebras = [repository.get_algebra(algebra_name)] if algebra_name else repository.list_algebras()
    for algebra in algebras:
        rows = repository.list_rows(algebra.name)
        if not rows:
            report.add(f"rows {algebra.name}", Verdict.PASS, "no catalogued rows")
            continue
        for row in rows:
            report.extend(verify_row(algebra, row, tester))

    logger.info("verify_table %s: %s", algebra_name or "all", report.summary())
    return report

"""
Shared fixtures.

The bundled catalog is loaded once per session; zero testers are rebuilt
per test so sampled points never depend on test order.
"""

import pytest

from jacobilie.loaders import load_catalog
from jacobilie.models import Report, Verdict
from jacobilie.symexpr import ZeroTester


@pytest.fixture(scope="session")
def repository():
    """The bundled catalog."""
    return load_catalog()


@pytest.fixture
def tester():
    """A zero tester with a fixed seed."""
    return ZeroTester.seeded(1234)


@pytest.fixture
def algebra(repository):
    """Look up a catalog algebra by name."""
    return repository.get_algebra


@pytest.fixture
def sample_report():
    """A report with one record of every verdict."""
    report = Report(command="verify-table --algebra III")
    report.add("family III.1", Verdict.PASS)
    report.add("lift-matches-print", Verdict.NUMERIC_PASS)
    report.add("field X2", Verdict.DISCREPANCY, "component 1: computed x1, printed -x1")
    report.add("closure", Verdict.FAIL, "outside the span: [X1, X2]")
    report.notes.append("III.1: E^1 sign corrected")
    return report

"""
Models module for JacobiLie.

Contains Pydantic models for algebras, Jacobi structures and check reports.
"""

from jacobilie.models.algebra import LieAlgebra
from jacobilie.models.jacobi import (
    AlgJacobiStructure,
    EquivalenceClass,
    GroupJacobiStructure,
    JacobiPair,
    Relation,
    SideCondition,
    TableRow,
)
from jacobilie.models.report import CheckRecord, Report, Verdict, verdict_for, weakest

__all__ = [
    "LieAlgebra",
    "AlgJacobiStructure",
    "EquivalenceClass",
    "GroupJacobiStructure",
    "JacobiPair",
    "Relation",
    "SideCondition",
    "TableRow",
    "CheckRecord",
    "Report",
    "Verdict",
    "verdict_for",
    "weakest",
]

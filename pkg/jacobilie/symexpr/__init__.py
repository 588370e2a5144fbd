"""
Symbolic expression layer.

Canonical forms, exact evaluation, the two-tier zero test and text
printing/parsing, all over sympy.
"""

from jacobilie.symexpr.evaluation import evaluate
from jacobilie.symexpr.kernel import (
    differentiate,
    is_structurally_zero,
    is_transcendental_free,
    normalize,
    numerator,
    substitute,
    to_expr,
)
from jacobilie.symexpr.printing import parse, to_text
from jacobilie.symexpr.zero_test import (
    ZeroTest,
    ZeroTester,
    ZeroTier,
    is_zero,
    zero_test,
)

__all__ = [
    "evaluate",
    "differentiate",
    "is_structurally_zero",
    "is_transcendental_free",
    "normalize",
    "numerator",
    "substitute",
    "to_expr",
    "parse",
    "to_text",
    "ZeroTest",
    "ZeroTester",
    "ZeroTier",
    "is_zero",
    "zero_test",
]

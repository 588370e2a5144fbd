"""
Canonical forms for symbolic expressions.

Expressions are sympy trees over the rationals in the shared symbols, closed
under exp, ln, sin, cos, sinh and cosh. The canonical form expands products
and collects everything over a single reduced denominator, so two
rational-function expressions are equal exactly when their canonical forms
are structurally identical.
"""

import logging
from fractions import Fraction
from typing import Any, Mapping, Union

import sympy

from jacobilie.symexpr.symbols import symbol

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, sympy.Expr]

TRANSCENDENTALS = (sympy.exp, sympy.log, sympy.sin, sympy.cos, sympy.sinh, sympy.cosh)


def to_expr(value: Any) -> sympy.Expr:
    """
    Coerce ints, Fractions, strings and sympy objects into an expression.

    Fractions become exact rationals; floats are refused so no binary
    rounding leaks into exact arithmetic.
    """
    if isinstance(value, sympy.Basic):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not expressions")
    if isinstance(value, int):
        return sympy.Integer(value)
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("Floats are not exact; pass a Fraction or a string")
    if isinstance(value, str):
        from jacobilie.symexpr.printing import parse

        return parse(value)
    return sympy.sympify(value)


def normalize(expr: Any) -> sympy.Expr:
    """
    Canonical form: expand, then cancel over a common reduced denominator.

    Transcendental atoms are treated as opaque generators, so identities such
    as cosh^2 - sinh^2 = 1 are not recognized here.
    """
    e = to_expr(expr)
    if e.is_Number:
        return e
    return sympy.cancel(sympy.expand(e))


def is_structurally_zero(expr: Any) -> bool:
    """True when the canonical form is the literal 0."""
    return normalize(expr) == 0


def differentiate(expr: Any, var: Union[str, sympy.Symbol]) -> sympy.Expr:
    """Partial derivative in canonical form."""
    v = symbol(var) if isinstance(var, str) else var
    return normalize(sympy.diff(to_expr(expr), v))


def substitute(expr: Any, bindings: Mapping[Any, Any]) -> sympy.Expr:
    """
    Simultaneously replace symbols by expressions, then normalize.

    Keys may be symbols or names; values anything to_expr accepts.
    """
    mapping = {
        (symbol(k) if isinstance(k, str) else k): to_expr(v)
        for k, v in bindings.items()
    }
    if not mapping:
        return normalize(expr)
    return normalize(to_expr(expr).subs(mapping, simultaneous=True))


def is_transcendental_free(expr: Any) -> bool:
    """True for rational functions, i.e. no exp, ln or trigonometric atoms."""
    return not to_expr(expr).has(*TRANSCENDENTALS)


def numerator(expr: Any) -> sympy.Expr:
    """Expanded numerator of the canonical form."""
    num, _ = sympy.fraction(normalize(expr))
    return sympy.expand(num)

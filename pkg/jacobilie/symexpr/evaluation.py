"""Exact evaluation of expressions at rational assignments."""

import logging
from typing import Any, Mapping, Union

import sympy

from jacobilie.config import settings
from jacobilie.errors import DomainError, MissingBinding
from jacobilie.symexpr.kernel import to_expr
from jacobilie.symexpr.symbols import sorted_symbols, symbol

logger = logging.getLogger(__name__)


def evaluate(expr: Any, assignment: Mapping[Any, Any]) -> Union[sympy.Rational, sympy.Float]:
    """
    Evaluate an expression at a rational assignment.

    Rational-function expressions evaluate exactly. Anything involving a
    transcendental value is returned as a Float carrying
    settings.precision_dps digits.

    Raises:
        MissingBinding: If a free symbol has no value
        DomainError: For ln of a non-positive value or a pole
    """
    e = to_expr(expr)
    mapping = {
        (symbol(k) if isinstance(k, str) else k): to_expr(v)
        for k, v in assignment.items()
    }
    for s in sorted_symbols(e.free_symbols):
        if s not in mapping:
            raise MissingBinding(s.name)

    for log_atom in e.atoms(sympy.log):
        argument = log_atom.args[0].subs(mapping, simultaneous=True)
        if argument.has(sympy.zoo, sympy.nan):
            raise DomainError(f"Pole inside ln argument of {log_atom}")
        if argument.evalf(settings.precision_dps) <= 0:
            raise DomainError(f"ln of non-positive value {argument}")

    value = sympy.cancel(e.subs(mapping, simultaneous=True))
    if value.has(sympy.zoo, sympy.nan, sympy.oo, -sympy.oo):
        raise DomainError(f"Evaluation of {e} hits a pole")
    if value.is_Rational:
        return value
    numeric = value.evalf(settings.precision_dps)
    if not numeric.is_Number:
        raise DomainError(f"Evaluation of {e} did not produce a number: {value}")
    return numeric

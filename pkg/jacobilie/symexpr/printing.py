"""
Text form of expressions.

Printing uses infix notation with `ln` for the natural logarithm; parsing
accepts the same notation (and `log` as an alias) so printed canonical forms
read back to the same tree.
"""

from tokenize import TokenError
from typing import Any, Dict, Mapping, Optional

import sympy
from sympy.parsing.sympy_parser import parse_expr, standard_transformations
from sympy.printing.str import StrPrinter

from jacobilie.errors import ExpressionSyntaxError
from jacobilie.symexpr.symbols import REGISTRY

FUNCTIONS: Dict[str, Any] = {
    "exp": sympy.exp,
    "ln": sympy.log,
    "log": sympy.log,
    "sin": sympy.sin,
    "cos": sympy.cos,
    "sinh": sympy.sinh,
    "cosh": sympy.cosh,
}


class ExpressionPrinter(StrPrinter):
    """StrPrinter that writes ln instead of log."""

    def _print_log(self, expr: sympy.log) -> str:
        return "ln(%s)" % self._print(expr.args[0])


_printer = ExpressionPrinter()


def to_text(expr: Any) -> str:
    """Render an expression as infix text."""
    return _printer.doprint(sympy.sympify(expr))


def parse(text: str, extra: Optional[Mapping[str, Any]] = None) -> sympy.Expr:
    """
    Parse infix text over the shared symbols.

    Args:
        text: Expression text, e.g. "exp(-x3)*(ln(x3 - x2) + 1)"
        extra: Additional names to resolve (e.g. the basis symbols X1..X3)

    Returns:
        The parsed expression

    Raises:
        ExpressionSyntaxError: If the text is not a valid expression
    """
    if not isinstance(text, str) or not text.strip():
        raise ExpressionSyntaxError(f"Empty or non-string expression: {text!r}")
    local_dict: Dict[str, Any] = dict(REGISTRY)
    local_dict.update(FUNCTIONS)
    if extra:
        local_dict.update(extra)
    try:
        result = parse_expr(text, local_dict=local_dict, transformations=standard_transformations)
    except (SyntaxError, TypeError, ValueError, TokenError) as e:
        raise ExpressionSyntaxError(f"Cannot parse expression: {text!r}", cause=e)
    if not isinstance(result, sympy.Expr):
        raise ExpressionSyntaxError(f"Not an expression: {text!r}")
    return result



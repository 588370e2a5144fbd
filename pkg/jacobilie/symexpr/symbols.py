"""
Symbol table shared by every module.

Coordinates are x1..x3, algebra-level bivector parameters l12/l13/l23,
Reeb parameters e1..e3, automorphism entries a11..a33 plus the free
entries b and c used by reduction matrices, and the Bianchi parameter a.
"""

from typing import Dict, Tuple

import sympy

COORDINATE_NAMES = ("x1", "x2", "x3")
LAMBDA_NAMES = ("l12", "l13", "l23")
REEB_NAMES = ("e1", "e2", "e3")

x1, x2, x3 = sympy.symbols(COORDINATE_NAMES)
l12, l13, l23 = sympy.symbols(LAMBDA_NAMES)
e1, e2, e3 = sympy.symbols(REEB_NAMES)
a = sympy.Symbol("a")
b = sympy.Symbol("b")
c = sympy.Symbol("c")
t = sympy.Symbol("t")

AUTOMORPHISM_SYMBOLS: Dict[str, sympy.Symbol] = {
    f"a{i}{j}": sympy.Symbol(f"a{i}{j}") for i in range(1, 4) for j in range(1, 4)
}

REGISTRY: Dict[str, sympy.Symbol] = {
    s.name: s for s in (x1, x2, x3, l12, l13, l23, e1, e2, e3, a, b, c, t)
}
REGISTRY.update(AUTOMORPHISM_SYMBOLS)


def symbol(name: str) -> sympy.Symbol:
    """Return the shared symbol for a name, creating a plain one if unknown."""
    return REGISTRY.get(name) or sympy.Symbol(name)


def coordinates(dim: int) -> Tuple[sympy.Symbol, ...]:
    """Coordinates x1..x_dim of the group manifold."""
    return (x1, x2, x3)[:dim]


def lambda_symbol(i: int, j: int) -> sympy.Symbol:
    """Bivector parameter l_ij for 1-based i < j."""
    return symbol(f"l{i}{j}")


def reeb_symbol(i: int) -> sympy.Symbol:
    """Reeb parameter e_i for 1-based i."""
    return symbol(f"e{i}")


def sort_key(s: sympy.Symbol) -> str:
    return s.name


def sorted_symbols(symbols) -> Tuple[sympy.Symbol, ...]:
    """Symbols ordered by name, the canonical variable order everywhere."""
    return tuple(sorted(symbols, key=sort_key))

"""
Exhaustive grid enumeration of algebra-level Jacobi structures.

Every (Λ, E) with upper-triangle and Reeb entries drawn from a small grid
is tested against the residual polynomials; the solutions found are then
matched against the catalogued families. A solution matching no family
points at a gap in the table.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from jacobilie.config import settings
from jacobilie.jacobi_alg.residuals import residual_polynomials
from jacobilie.jacobi_alg.solver import is_consistent
from jacobilie.loaders import default_repository
from jacobilie.models import AlgJacobiStructure, LieAlgebra, Relation, Report, TableRow, Verdict
from jacobilie.repository import ICatalogRepository
from jacobilie.symexpr import numerator, substitute
from jacobilie.symexpr.symbols import lambda_symbol, reeb_symbol, sorted_symbols

logger = logging.getLogger(__name__)

# Algebras without catalogued structures; enumeration there is exploratory.
EXPLORATORY = ("VIII", "IX")
DEFAULT_PARAMETER = 2


def generic_structure(dim: int) -> AlgJacobiStructure:
    """The structure with every entry a free parameter: l_ij above the diagonal, e_i."""
    lam = {(i, j): lambda_symbol(i, j) for i in range(1, dim + 1) for j in range(i + 1, dim + 1)}
    return AlgJacobiStructure.from_components(dim, lam, [reeb_symbol(i) for i in range(1, dim + 1)])


def _compile(polys: Sequence[sympy.Expr], variables: Sequence[sympy.Symbol]) -> Callable[..., list]:
    """All residuals as one function; integer coefficients keep Fraction arithmetic exact."""
    cleared = [sympy.Poly(p, *variables, domain="QQ").clear_denoms()[1].as_expr() for p in polys]
    return sympy.lambdify(variables, cleared, modules="math")


def grid_solutions(
    algebra: LieAlgebra,
    grid: Sequence[Fraction],
) -> Tuple[List[Dict[sympy.Symbol, Fraction]], int]:
    """
    All grid points where every residual vanishes.

    Returns:
        The solutions (parameter -> value) and the number of candidates tried
    """
    structure = generic_structure(algebra.dim)
    variables = structure.parameters
    residuals = _compile(residual_polynomials(algebra, structure), variables)
    solutions = []
    candidates = 0
    for point in product(grid, repeat=len(variables)):
        candidates += 1
        if all(v == 0 for v in residuals(*point)):
            solutions.append(dict(zip(variables, point)))
    return solutions, candidates


def _entries(structure: AlgJacobiStructure) -> List[sympy.Expr]:
    return list(structure.upper().values()) + list(structure.reeb)


def matches_family(
    family: AlgJacobiStructure,
    values: Sequence[Fraction],
) -> bool:
    """
    True when some admissible choice of the family's parameters yields the
    concrete entries (upper triangle of Λ, then E).

    Entries that are a bare parameter (up to sign) are assigned directly;
    the rest become polynomial equations with denominators cleared, so a
    family also covers the points where only an inferred condition fails.
    Consistency of these equations with the printed side conditions is
    decided by a Gröbner basis.
    """
    entries = _entries(family)
    bindings: Dict[sympy.Symbol, sympy.Expr] = {}
    pending = []
    for entry, value in zip(entries, values):
        target = sympy.Rational(value.numerator, value.denominator)
        if entry.is_Symbol or (-entry).is_Symbol:
            sign = 1 if entry.is_Symbol else -1
            param = entry if entry.is_Symbol else -entry
            assigned = sign * target
            if param in bindings and bindings[param] != assigned:
                return False
            bindings[param] = assigned
        else:
            pending.append((entry, target))

    equations = []
    nonzero = []
    for entry, target in pending:
        cleared = numerator(entry - target)
        equations.append(numerator(substitute(cleared, bindings)) if bindings else cleared)

    for condition in family.conditions:
        if condition.inferred:
            continue
        expr = substitute(condition.expr, bindings)
        if condition.relation is Relation.ZERO:
            equations.append(numerator(expr))
        else:
            nonzero.append(expr)

    if any(e.is_Number and e != 0 for e in equations):
        return False
    if any(e.is_Number and e == 0 for e in nonzero):
        return False
    unknowns = set()
    for e in equations + nonzero:
        unknowns |= e.free_symbols
    return is_consistent(equations, sorted_symbols(unknowns), nonzero)


def _instantiate_rows(rows: List[TableRow], algebra: LieAlgebra, value) -> List[Tuple[str, AlgJacobiStructure]]:
    if not algebra.is_parametric:
        return [(row.id, row.family) for row in rows]
    binding = {algebra.parameter: value}
    return [(row.id, row.family.substitute(binding)) for row in rows]


def grid_enumerate(
    algebra_name: str,
    grid: Optional[Sequence] = None,
    repository: Optional[ICatalogRepository] = None,
    parameter_value: Optional[int] = None,
) -> Report:
    """
    Enumerate grid solutions of an algebra and match them to catalogued families.

    Args:
        algebra_name: Catalog name
        grid: Entry values (uses settings.grid_values if None)
        parameter_value: Value of the Bianchi parameter for VIa/VIIa

    Raises:
        UnknownAlgebra: If the algebra is not catalogued
    """
    repository = repository or default_repository()
    algebra = repository.get_algebra(algebra_name)
    values = [Fraction(v) for v in (grid if grid is not None else settings.grid_values)]
    report = Report(command=f"grid-enumerate --algebra {algebra.name}")

    if algebra.is_parametric:
        value = parameter_value if parameter_value is not None else DEFAULT_PARAMETER
        report.notes.append(f"{algebra.parameter} = {value}")
        concrete = algebra.instantiate(value)
    else:
        value = None
        concrete = algebra

    solutions, candidates = grid_solutions(concrete, values)
    families = _instantiate_rows(repository.list_rows(algebra.name), algebra, value)
    logger.info("%s: %d of %d grid points solve the residuals", algebra.name, len(solutions), candidates)

    generic = generic_structure(algebra.dim)
    unmatched = []
    matched_rows: Dict[str, int] = {row_id: 0 for row_id, _ in families}
    for solution in solutions:
        point = [solution[p] for p in _entries(generic)]
        hit = next((row_id for row_id, family in families if matches_family(family, point)), None)
        if hit is None:
            unmatched.append(str(generic.substitute({k: _rational(v) for k, v in solution.items()})))
        else:
            matched_rows[hit] += 1

    report.data.update(
        {
            "grid": [str(v) for v in values],
            "candidates": candidates,
            "solutions": len(solutions),
            "matched": matched_rows,
            "unmatched": unmatched,
        }
    )
    name = f"grid {algebra.name}"
    if not unmatched:
        report.add(name, Verdict.PASS, f"{len(solutions)} solutions, all in catalogued families")
    elif algebra.name in EXPLORATORY or not families:
        report.add(name, Verdict.DISCREPANCY, *[f"no catalogued family: {u}" for u in unmatched])
        report.notes.append(f"{algebra.name} has no catalogued structures; enumeration is exploratory")
    else:
        report.add(name, Verdict.FAIL, *[f"unmatched: {u}" for u in unmatched])
    return report


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)

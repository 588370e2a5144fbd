"""
Exact solver for zero-dimensional polynomial systems over the rationals.

A lexicographic Gröbner basis triangularizes the system; real roots are
then recovered by back-substitution, one variable at a time from the last.
Univariate factors of degree one and two are solved in closed form;
higher-degree irreducible factors are reported by marking the result
incomplete.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, Field

from jacobilie.errors import NotPolynomial, PositiveDimensional
from jacobilie.symexpr import is_transcendental_free, to_expr, to_text
from jacobilie.symexpr.symbols import sorted_symbols

logger = logging.getLogger(__name__)

Solution = Dict[sympy.Symbol, sympy.Expr]


class SolveResult(BaseModel):
    """
    Real solutions of a polynomial system.

    Attributes:
        unknowns: Variables solved for, in name order
        solutions: Assignments, rationals first, then by value
        complete: False when a univariate factor of degree above two was left unsolved
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    unknowns: Tuple[sympy.Symbol, ...]
    solutions: Tuple[Solution, ...] = Field(default_factory=tuple)
    complete: bool = True

    def to_dict(self) -> dict:
        return {
            "unknowns": [u.name for u in self.unknowns],
            "solutions": [
                {u.name: to_text(s[u]) for u in self.unknowns} for s in self.solutions
            ],
            "complete": self.complete,
        }


def _validate(polys: Iterable, unknowns: Sequence[sympy.Symbol]) -> List[sympy.Poly]:
    allowed = set(unknowns)
    result = []
    for p in polys:
        expr = to_expr(p)
        if not is_transcendental_free(expr):
            raise NotPolynomial(f"Transcendental term in {to_text(expr)}")
        extra = expr.free_symbols - allowed
        if extra:
            names = ", ".join(s.name for s in sorted_symbols(extra))
            raise NotPolynomial(f"Symbols {names} in {to_text(expr)} are not unknowns")
        expanded = sympy.expand(expr)
        if allowed and not expanded.is_polynomial(*unknowns):
            raise NotPolynomial(f"Not a polynomial in the unknowns: {to_text(expr)}")
        try:
            poly = sympy.Poly(expanded, *unknowns, domain="QQ") if unknowns else None
        except (sympy.polys.polyerrors.PolynomialError, sympy.polys.polyerrors.CoercionFailed) as e:
            raise NotPolynomial(f"Not a rational polynomial: {to_text(expr)}", cause=e)
        if poly is None:
            if expanded != 0:
                result.append(None)
            continue
        if not poly.is_zero:
            result.append(poly)
    return result


def _real_roots(univariate: sympy.Poly) -> Tuple[List[sympy.Expr], bool]:
    """Real roots of a univariate polynomial; the flag is False when some were not solved."""
    if not univariate.domain.is_QQ and not univariate.domain.is_ZZ:
        found = sympy.roots(univariate, multiple=False)
        real = [r for r in found if r.is_real]
        return real, sum(found.values()) == univariate.degree()

    roots: List[sympy.Expr] = []
    complete = True
    _, factors = univariate.factor_list()
    for factor, _multiplicity in factors:
        degree = factor.degree()
        coefficients = factor.all_coeffs()
        if degree == 1:
            p, q = coefficients
            roots.append(-q / p)
        elif degree == 2:
            a, b, c = coefficients
            discriminant = b * b - 4 * a * c
            if discriminant < 0:
                continue
            root = sympy.sqrt(discriminant)
            for sign in (-1, 1):
                roots.append(sympy.radsimp((-b + sign * root) / (2 * a)))
        else:
            complete = False
            logger.warning("Leaving degree %d factor unsolved: %s", degree, factor.as_expr())
    return roots, complete


def _is_zero_exact(expr: sympy.Expr) -> bool:
    value = sympy.expand(expr)
    if value == 0:
        return True
    return sympy.simplify(value) == 0


def _sort_key(solution: Solution, unknowns: Sequence[sympy.Symbol]):
    irrational = any(not solution[u].is_Rational for u in unknowns)
    return (irrational, tuple(float(solution[u]) for u in unknowns))


def solve_determined(
    polys: Iterable,
    unknowns: Iterable,
    nonzero: Iterable = (),
) -> SolveResult:
    """
    All real solutions of a zero-dimensional system.

    Args:
        polys: Polynomials with rational coefficients in the unknowns
        unknowns: Symbols to solve for
        nonzero: Expressions that must not vanish at a solution

    Returns:
        SolveResult with rational solutions before radical ones

    Raises:
        NotPolynomial: If an input is not a rational polynomial in the unknowns
        PositiveDimensional: If the solution set is infinite
    """
    variables = sorted_symbols(to_expr(u) for u in unknowns)
    conditions = [to_expr(e) for e in nonzero]
    validated = _validate(polys, variables)

    if any(p is None for p in validated):
        return SolveResult(unknowns=variables)
    if not variables:
        return SolveResult(unknowns=variables, solutions=({},))
    if not validated:
        raise PositiveDimensional(
            "No equations constrain " + ", ".join(v.name for v in variables)
        )

    basis = sympy.groebner(validated, *variables, order="lex", domain="QQ")
    if basis.exprs == [1]:
        logger.debug("System is inconsistent")
        return SolveResult(unknowns=variables)
    if not basis.is_zero_dimensional:
        raise PositiveDimensional("The solution set is positive-dimensional")

    partial: List[Solution] = [{}]
    complete = True
    for index in range(len(variables) - 1, -1, -1):
        var = variables[index]
        allowed = set(variables[index:])
        extended: List[Solution] = []
        for assignment in partial:
            candidates = []
            for g in basis.exprs:
                if not g.free_symbols <= allowed or var not in g.free_symbols:
                    continue
                reduced = sympy.expand(g.subs(assignment))
                if reduced != 0:
                    candidates.append(sympy.Poly(reduced, var))
            if not candidates:
                raise PositiveDimensional(f"{var.name} is not determined")
            pivot = min(candidates, key=lambda p: p.degree())
            roots, solved = _real_roots(pivot)
            complete = complete and solved
            for root in roots:
                trial = dict(assignment)
                trial[var] = root
                if all(_is_zero_exact(p.as_expr().subs(trial)) for p in candidates):
                    extended.append(trial)
        partial = extended

    solutions = []
    for solution in partial:
        if not all(_is_zero_exact(p.as_expr().subs(solution)) for p in validated):
            logger.warning("Dropping candidate that fails the input system: %s", solution)
            continue
        if any(_is_zero_exact(e.subs(solution)) for e in conditions):
            continue
        solutions.append({v: solution[v] for v in variables})

    solutions.sort(key=lambda s: _sort_key(s, variables))
    logger.debug("Found %d solutions", len(solutions))
    return SolveResult(unknowns=variables, solutions=tuple(solutions), complete=complete)


def is_consistent(polys: Iterable, unknowns: Sequence[sympy.Symbol], nonzero: Iterable = ()) -> bool:
    """
    False when the system has no complex solution with the nonzero
    expressions non-vanishing, decided by a Gröbner basis with an extra
    Rabinowitsch variable.
    """
    variables = list(unknowns)
    equations = [sympy.expand(to_expr(p)) for p in polys]
    equations = [e for e in equations if e != 0]
    guard = sympy.Integer(1)
    for e in nonzero:
        guard *= to_expr(e)
    if guard == 0:
        return False
    if guard.free_symbols:
        rabinowitsch = sympy.Dummy("t")
        equations.append(sympy.expand(rabinowitsch * guard - 1))
        variables.append(rabinowitsch)
    if not equations:
        return True
    if not variables:
        return all(e == 0 for e in equations)
    basis = sympy.groebner(equations, *variables, order="grevlex", domain="QQ")
    return basis.exprs != [1]

"""
Vessiot-Guldberg closure of a family of vector fields.

Linear independence over the constants is decided numerically: the fields
are evaluated at random points, stacked into a matrix and its singular
values compared against a tolerance. Each commutator is then expanded in
the generators by least squares at the same points, the coefficients are
rounded to nearby rationals and the expansion is verified exactly.
"""

import logging
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath
import sympy
from pydantic import BaseModel, ConfigDict, Field

from jacobilie.errors import DependentGenerators, DomainError
from jacobilie.hamsys.fields import commutator
from jacobilie.loaders import default_repository
from jacobilie.models import LieAlgebra
from jacobilie.models.geometry import VectorField
from jacobilie.repository import ICatalogRepository
from jacobilie.symexpr import ZeroTester, to_text
from jacobilie.symexpr.symbols import sorted_symbols
from jacobilie.symexpr.zero_test import evaluate_at

logger = logging.getLogger(__name__)

StructureTable = Dict[Tuple[int, int], Dict[int, sympy.Rational]]


class LieSystemReport(BaseModel):
    """
    Commutator table of a family of vector fields.

    Attributes:
        generators: The fields X_1..X_n
        constants: (i, j) -> {k: c} with [X_i, X_j] = sum_k c X_k, 1-based, i < j
        closed: True when every commutator is a constant combination of generators
        unexpressed: Pairs whose commutator left the span
        matched_algebra: Catalog algebra with the same table, if any
        relabeling: Generator order realizing the match (1-based), when not the identity
        time_dependent_field: Components of sum_i a_i(t) X_i, when built
        hamiltonian: sum_i a_i(t) f_i, when built
        hamiltonian_verified: X_h equals the time-dependent field
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    generators: Tuple[VectorField, ...]
    constants: StructureTable = Field(default_factory=dict)
    closed: bool = False
    unexpressed: Tuple[Tuple[int, int], ...] = Field(default_factory=tuple)
    matched_algebra: Optional[str] = None
    relabeling: Optional[Tuple[int, ...]] = None
    time_dependent_field: Optional[Tuple[sympy.Expr, ...]] = None
    hamiltonian: Optional[sympy.Expr] = None
    hamiltonian_verified: Optional[bool] = None

    def coefficient(self, i: int, j: int, k: int) -> sympy.Rational:
        """c_ij^k with antisymmetry, 1-based."""
        if i == j:
            return sympy.Integer(0)
        if i > j:
            return -self.coefficient(j, i, k)
        return self.constants.get((i, j), {}).get(k, sympy.Integer(0))

    def bracket_lines(self) -> List[str]:
        lines = []
        for (i, j), row in sorted(self.constants.items()):
            terms = [f"{to_text(c)}*X{k}" if c != 1 else f"X{k}" for k, c in sorted(row.items()) if c != 0]
            if terms:
                lines.append(f"[X{i}, X{j}] = " + " + ".join(terms))
        return lines

    def to_dict(self) -> dict:
        data = {
            "generators": [g.to_list() for g in self.generators],
            "closed": self.closed,
            "commutators": self.bracket_lines(),
            "unexpressed": [list(p) for p in self.unexpressed],
            "matched_algebra": self.matched_algebra,
            "relabeling": list(self.relabeling) if self.relabeling else None,
        }
        if self.time_dependent_field is not None:
            data["time_dependent_field"] = [to_text(c) for c in self.time_dependent_field]
        if self.hamiltonian is not None:
            data["hamiltonian"] = to_text(self.hamiltonian)
            data["hamiltonian_verified"] = self.hamiltonian_verified
        return data


def _sample_matrix(fields: Sequence[VectorField], tester: ZeroTester, points: int):
    """Columns are the fields evaluated at random points, stacked by component."""
    symbols = set()
    for field in fields:
        for component in field.components:
            symbols |= component.free_symbols
    variables = sorted_symbols(symbols)
    functions = [
        [sympy.lambdify(variables, component, modules="mpmath") for component in field.components]
        for field in fields
    ]

    samples = []
    rejected = 0
    while len(samples) < points:
        point = tester.sample_point(len(variables))
        values = [[evaluate_at(fn, point) for fn in row] for row in functions]
        if any(v is None for row in values for v in row):
            rejected += 1
            if rejected > tester.config.max_resample_attempts:
                raise DomainError("No common sample point for the generators")
            continue
        samples.append((point, values))
    return variables, samples


def _stack(samples, index: int) -> List[mpmath.mpf]:
    column = []
    for _, values in samples:
        column.extend(values[index])
    return column


def _evaluate_field(field: VectorField, variables, samples) -> List[mpmath.mpf]:
    functions = [sympy.lambdify(variables, c, modules="mpmath") for c in field.components]
    column = []
    for point, _ in samples:
        for fn in functions:
            value = evaluate_at(fn, point)
            column.append(mpmath.mpf(0) if value is None else value)
    return column


def _rationalize(value: mpmath.mpf, limit: int) -> sympy.Rational:
    fraction = Fraction(float(value)).limit_denominator(limit)
    return sympy.Rational(fraction.numerator, fraction.denominator)


def closure_check(
    generators: Sequence[VectorField],
    tester: Optional[ZeroTester] = None,
    repository: Optional[ICatalogRepository] = None,
) -> LieSystemReport:
    """
    Commutator table of the generators and whether they close.

    Raises:
        DependentGenerators: If the generators are linearly dependent over the constants
    """
    tester = tester or ZeroTester.seeded()
    fields = list(generators)
    n = len(fields)
    if n == 0:
        raise DependentGenerators("No generators given")
    cfg = tester.config

    with mpmath.workdps(cfg.precision_dps):
        points = max(cfg.closure_sample_points, n)
        variables, samples = _sample_matrix(fields, tester, points)
        basis = mpmath.matrix([_stack(samples, i) for i in range(n)]).T
        singular = mpmath.svd_r(basis, compute_uv=False)
        singular = [abs(singular[k]) for k in range(singular.rows)]
        largest = max(singular, default=mpmath.mpf(0))
        rank = sum(1 for s in singular if largest > 0 and s > cfg.rank_tolerance * largest)
        if rank < n:
            raise DependentGenerators(f"{n} generators span a space of dimension {rank}")
        normal = basis.T * basis

        constants: StructureTable = {}
        unexpressed = []
        for i, j in combinations(range(n), 2):
            bracket = commutator(fields[i], fields[j])
            target = mpmath.matrix(_evaluate_field(bracket, variables, samples))
            solution = mpmath.lu_solve(normal, basis.T * target)
            coefficients = [_rationalize(solution[k], cfg.coefficient_denominator_limit) for k in range(n)]
            remainder = bracket.minus_combination(coefficients, fields)
            if all(tester.is_zero(c) for c in remainder.components):
                constants[(i + 1, j + 1)] = {k + 1: c for k, c in enumerate(coefficients) if c != 0}
            else:
                unexpressed.append((i + 1, j + 1))

    closed = not unexpressed
    matched, relabeling = (None, None)
    if closed:
        matched, relabeling = match_algebra(constants, n, repository)
    logger.debug("Closure of %d generators: closed=%s match=%s", n, closed, matched)
    return LieSystemReport(
        generators=tuple(fields),
        constants=constants,
        closed=closed,
        unexpressed=tuple(unexpressed),
        matched_algebra=matched,
        relabeling=relabeling,
    )


def _table_matches(algebra: LieAlgebra, constants: StructureTable, order: Tuple[int, ...]) -> bool:
    n = algebra.dim
    for a, b in combinations(range(n), 2):
        i, j = order[a], order[b]
        for c in range(n):
            k = order[c]
            if i < j:
                value = constants.get((i + 1, j + 1), {}).get(k + 1, 0)
            else:
                value = -constants.get((j + 1, i + 1), {}).get(k + 1, 0)
            if algebra.f(a, b, c) - value != 0:
                return False
    return True


def match_algebra(
    constants: StructureTable,
    size: int,
    repository: Optional[ICatalogRepository] = None,
) -> Tuple[Optional[str], Optional[Tuple[int, ...]]]:
    """
    Catalog algebra whose structure constants equal the table, trying the
    given generator order first and then every relabeling.

    Returns:
        (name, relabeling) where relabeling is None for the given order
    """
    repository = repository or default_repository()
    candidates = [a for a in repository.list_algebras() if a.dim == size and not a.is_parametric]
    identity = tuple(range(size))
    for algebra in candidates:
        if _table_matches(algebra, constants, identity):
            return algebra.name, None
    for order in permutations(range(size)):
        if order == identity:
            continue
        for algebra in candidates:
            if _table_matches(algebra, constants, order):
                return algebra.name, tuple(i + 1 for i in order)
    return None, None

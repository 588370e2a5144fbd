"""
Equivalence of algebra-level Jacobi structures under automorphisms.

transform(J, A) = (A^T Λ A, E A). Two concrete structures are equivalent
when some automorphism carries one onto the other. Witnesses are searched
branch by branch over the parametric automorphism family: the matching
equations are polynomial in the branch parameters, inconsistency is
certified by a Gröbner basis, and remaining freedom is fixed by binding
free parameters to small integers.
"""

import logging
import random
from typing import List, Optional, Sequence, Tuple

import sympy
from pydantic import BaseModel, ConfigDict

from jacobilie.errors import JacobiError, PositiveDimensional, SingularMatrix
from jacobilie.jacobi_alg.solver import is_consistent, solve_determined
from jacobilie.liealg import automorphism_family, is_automorphism
from jacobilie.loaders import default_repository
from jacobilie.models import AlgJacobiStructure, JacobiPair, LieAlgebra, Report, Verdict
from jacobilie.models.automorphism import AutomorphismBranch
from jacobilie.repository import ICatalogRepository
from jacobilie.symexpr import ZeroTester, normalize, numerator, substitute, to_text

logger = logging.getLogger(__name__)

BINDING_VALUES = (0, 1, -1, 2, -2)
RANDOM_SEARCH_ATTEMPTS = 2000


class EquivalenceResult(BaseModel):
    """
    Outcome of an equivalence search.

    Attributes:
        witness: Automorphism A with target = transform(source, A), if found
        branch: Label of the branch the witness belongs to
        method: "identity", "groebner" or "random-search"
        certified: True when absence of a witness is proved (not just unfound)
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    witness: Optional[sympy.ImmutableMatrix] = None
    branch: str = ""
    method: str = "groebner"
    certified: bool = True

    @property
    def equivalent(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        witness = None
        if self.witness is not None:
            witness = [
                [to_text(self.witness[i, j]) for j in range(self.witness.cols)]
                for i in range(self.witness.rows)
            ]
        return {
            "equivalent": self.equivalent,
            "witness": witness,
            "branch": self.branch,
            "method": self.method,
            "certified": self.certified,
        }


def transform(structure: JacobiPair, matrix, tester: Optional[ZeroTester] = None) -> AlgJacobiStructure:
    """
    Apply a change of basis: (A^T Λ A, E A).

    Raises:
        SingularMatrix: If det A vanishes identically
    """
    A = sympy.ImmutableMatrix(matrix)
    if A.shape != (structure.dim, structure.dim):
        raise JacobiError(f"{A.rows}x{A.cols} matrix for a {structure.dim}-dimensional structure")
    if (tester or ZeroTester.seeded()).is_zero(A.det()):
        raise SingularMatrix("Transformation matrix has zero determinant")
    lam = (A.T * structure.lam * A).applyfunc(normalize)
    reeb = (structure.reeb_row() * A).applyfunc(normalize)
    return AlgJacobiStructure(lam=lam, reeb=tuple(reeb))


def _matching_equations(source: JacobiPair, target: JacobiPair, A: sympy.MatrixBase) -> List[sympy.Expr]:
    n = source.dim
    lam = A.T * source.lam * A
    reeb = source.reeb_row() * A
    equations = []
    for i in range(n):
        for j in range(i + 1, n):
            equations.append(numerator(lam[i, j] - target.lam[i, j]))
        equations.append(numerator(reeb[0, i] - target.reeb[i]))
    return [e for e in equations if e != 0]


def _search_branch(
    source: JacobiPair,
    target: JacobiPair,
    branch: AutomorphismBranch,
) -> Tuple[Optional[sympy.ImmutableMatrix], bool]:
    """Witness in one branch, and whether absence is certified."""
    unknowns = list(branch.parameters)
    equations = _matching_equations(source, target, branch.matrix)
    if not is_consistent(equations, unknowns, branch.nonzero):
        return None, True

    bindings = {}
    order = list(reversed(unknowns))
    while True:
        remaining = [u for u in unknowns if u not in bindings]
        current = [substitute(e, bindings) for e in equations]
        current = [e for e in current if e != 0]
        guards = [substitute(e, bindings) for e in branch.nonzero]
        try:
            result = solve_determined(current, remaining, guards)
        except PositiveDimensional:
            bound = _bind_one(current, remaining, guards, order, bindings)
            if not bound:
                return None, False
            continue
        if not result.solutions:
            return None, False
        solution = dict(bindings)
        solution.update(result.solutions[0])
        return sympy.ImmutableMatrix(branch.matrix.subs(solution)), True


def _bind_one(equations, remaining, guards, order, bindings) -> bool:
    """Bind the first free unknown that keeps the system consistent."""
    for var in order:
        if var in bindings or var not in remaining:
            continue
        for value in BINDING_VALUES:
            trial = {var: sympy.Integer(value)}
            eqs = [substitute(e, trial) for e in equations]
            if any(e.is_Number and e != 0 for e in eqs):
                continue
            rest = [u for u in remaining if u != var]
            if is_consistent(eqs, rest, [substitute(g, trial) for g in guards]):
                bindings[var] = sympy.Integer(value)
                logger.debug("Bound %s = %s", var, value)
                return True
    return False


def are_equivalent(
    algebra: LieAlgebra,
    first: JacobiPair,
    second: JacobiPair,
    repository: Optional[ICatalogRepository] = None,
    allow_random_search: bool = False,
    rng: Optional[random.Random] = None,
) -> EquivalenceResult:
    """
    Search an automorphism A with first == transform(second, A).

    Args:
        algebra: Algebra both structures live on
        first: Concrete structure, typically a family member
        second: Concrete structure, typically a class representative
        allow_random_search: For constraint-only families, try random small
            integer matrices instead of raising
        rng: Random source for the random search

    Raises:
        ValueError: If either structure has free parameters
        UnsupportedAlgebra: For constraint-only families without random search
    """
    if not first.is_concrete or not second.is_concrete:
        raise ValueError("Equivalence needs structures without free parameters")
    if first.same_as(second):
        return EquivalenceResult(
            witness=sympy.ImmutableMatrix(sympy.eye(algebra.dim)), method="identity"
        )

    family = automorphism_family(algebra, repository or default_repository())
    if not family.is_parametric:
        if not allow_random_search:
            family.require_parametric()
        return _random_search(algebra, second, first, rng or random.Random(0))

    certified = True
    for branch in family.branches:
        witness, branch_certified = _search_branch(second, first, branch)
        if witness is not None:
            if transform(second, witness).same_as(first):
                return EquivalenceResult(witness=witness, branch=branch.label)
            logger.warning("Witness in branch %r failed verification", branch.label)
            branch_certified = False
        certified = certified and branch_certified
    return EquivalenceResult(certified=certified)


def _random_search(
    algebra: LieAlgebra,
    source: JacobiPair,
    target: JacobiPair,
    rng: random.Random,
) -> EquivalenceResult:
    n = algebra.dim
    tester = ZeroTester(rng)
    for _ in range(RANDOM_SEARCH_ATTEMPTS):
        A = sympy.ImmutableMatrix(n, n, lambda i, j: rng.randint(-2, 2))
        if A.det() == 0:
            continue
        if transform(source, A, tester).same_as(target) and is_automorphism(algebra, A, tester):
            return EquivalenceResult(witness=A, method="random-search", certified=False)
    return EquivalenceResult(method="random-search", certified=False)


def reduction_check(
    name: str,
    repository: Optional[ICatalogRepository] = None,
    tester: Optional[ZeroTester] = None,
) -> Report:
    """
    Verify a catalogued reduction of a family to class representatives.

    For each case: the reducing matrix is an automorphism with the printed
    determinant, and transforms every member of the family (restricted by
    the case bindings) onto the target representative. Poisson cases must
    have vanishing Reeb vector.
    """
    repository = repository or default_repository()
    tester = tester or ZeroTester.seeded()
    reduction = repository.get_reduction(name)
    algebra = repository.get_algebra(reduction.algebra)
    _, family = repository.find_structure(reduction.row)
    report = Report(command=f"reduction {name}")

    for index, branch in enumerate(reduction.branches, 1):
        prefix = f"case {index}"
        member = family.substitute(branch.bindings)
        if branch.poisson:
            zero = all(tester.is_zero(v) for v in member.reeb)
            report.add(f"{prefix} poisson", Verdict.PASS if zero else Verdict.FAIL, branch.label)
            continue

        A = branch.matrix.applyfunc(lambda v: substitute(v, branch.bindings))
        if not is_automorphism(algebra, A, tester):
            report.add(f"{prefix} automorphism", Verdict.FAIL, branch.label)
            continue
        report.add(f"{prefix} automorphism", Verdict.PASS, branch.label)

        if branch.determinant is not None:
            det_ok = tester.is_zero(A.det() - substitute(branch.determinant, branch.bindings))
            report.add(
                f"{prefix} determinant",
                Verdict.PASS if det_ok else Verdict.FAIL,
                f"det = {to_text(normalize(A.det()))}",
            )

        image = transform(member, A, tester)
        detail = []
        for u, v in zip(list(image.lam) + list(image.reeb), list(branch.target.lam) + list(branch.target.reeb)):
            if not tester.is_zero(u - v):
                detail.append(f"{to_text(u)} != {to_text(v)}")
        report.add(
            f"{prefix} maps to representative",
            Verdict.PASS if not detail else Verdict.FAIL,
            *detail,
        )
    return report


def class_representatives_search(
    algebra: LieAlgebra,
    candidates: Sequence[JacobiPair],
    repository: Optional[ICatalogRepository] = None,
) -> List[List[int]]:
    """Group concrete structures into equivalence classes (indices into candidates)."""
    groups: List[List[int]] = []
    for i, candidate in enumerate(candidates):
        for group in groups:
            if are_equivalent(algebra, candidates[group[0]], candidate, repository).equivalent:
                group.append(i)
                break
        else:
            groups.append([i])
    return groups

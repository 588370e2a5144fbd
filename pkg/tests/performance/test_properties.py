"""
Property suites and whole-catalog runs.

These exercise the symbolic machinery on many random inputs and take
minutes rather than seconds; run them with `pytest -m slow`. Counts fixed
by the acceptance runs use a seeded random.Random so the draws are stable.
"""

import random

import mpmath
import pytest
import sympy

from jacobilie.group_geom import is_jacobi_manifold, lift_to_group
from jacobilie.hamsys import commutator, hamiltonian_vf, jacobi_bracket, verify_example
from jacobilie.jacobi_alg import grid_enumerate, transform, verify_family, verify_table
from jacobilie.liealg import (
    automorphism_family,
    is_automorphism,
    matrix_identities_check,
    random_instance,
)
from jacobilie.models import JacobiPair, Verdict
from jacobilie.symexpr import ZeroTester
from jacobilie.symexpr.symbols import sorted_symbols, x1, x2, x3
from jacobilie.symexpr.zero_test import evaluate_at

pytestmark = pytest.mark.slow

MONOMIALS = [sympy.Integer(1), x1, x2, x3, x1 * x2, x1 * x3, x2 * x3, x1 ** 2, x3 ** 2]
PARAMETRIC = ["A1", "A2", "I", "II", "III", "IV", "V", "VI0", "VIa", "VII0", "VIIa"]


def random_quadratic(rng: random.Random) -> sympy.Expr:
    """A polynomial of degree at most two in x1, x2, x3."""
    return sum(rng.randint(-3, 3) * m for m in MONOMIALS)


def random_structure(rng: random.Random) -> JacobiPair:
    lam = {key: random_quadratic(rng) for key in ("12", "13", "23")}
    return JacobiPair.from_components(3, lam, [random_quadratic(rng) for _ in range(3)])


def sampled_mismatches(lhs, rhs, tester: ZeroTester, points: int = 100) -> list:
    """Sample points where lhs and rhs differ by more than 1e-9 relative."""
    variables = sorted_symbols(set().union(*(sympy.sympify(e).free_symbols for e in list(lhs) + list(rhs))))
    pairs = [
        (sympy.lambdify(variables, l, modules="mpmath"), sympy.lambdify(variables, r, modules="mpmath"))
        for l, r in zip(lhs, rhs)
    ]
    bad = []
    with mpmath.workdps(30):
        accepted = 0
        while accepted < points:
            point = tester.sample_point(len(variables))
            values = [(evaluate_at(fl, point), evaluate_at(fr, point)) for fl, fr in pairs]
            if any(l is None or r is None for l, r in values):
                continue
            accepted += 1
            for l, r in values:
                if abs(l - r) > mpmath.mpf("1e-9") * max(1, abs(l)):
                    bad.append((point, l, r))
    return bad


class TestGridCrossValidation:
    """Every small-integer solution lies in a catalogued family."""

    @pytest.mark.parametrize("name", ["A1", "A2", "I", "II"])
    def test_no_solution_outside_the_catalog(self, name, repository):
        report = grid_enumerate(name, [-2, -1, 0, 1, 2], repository)
        assert report.get(f"grid {name}").verdict is Verdict.PASS, report.data["unmatched"][:5]

    def test_default_grid_on_a2(self, repository):
        report = grid_enumerate("A2", None, repository)
        assert report.data["candidates"] == 125
        assert report.verdict is Verdict.PASS


class TestMorphismProperty:
    """[X_f, X_g] = X_{f,g} on every catalogued example."""

    @pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 6])
    def test_hamiltonian_map_preserves_brackets(self, number, repository):
        rng = random.Random(number)
        tester = ZeroTester.seeded(number)
        example = repository.get_example(number)
        lifted = lift_to_group(example.structure, repository.get_vielbein(example.group))
        for _ in range(3):
            f, g = random_quadratic(rng), random_quadratic(rng)
            if lifted.dim == 2:
                f, g = f.subs(x3, 0), g.subs(x3, 0)
            lhs = commutator(hamiltonian_vf(lifted, f), hamiltonian_vf(lifted, g))
            rhs = hamiltonian_vf(lifted, jacobi_bracket(lifted, f, g))
            assert sampled_mismatches(lhs.components, rhs.components, tester) == [], (f, g)


class TestFormulationsAgree:
    """The Schouten and coordinate forms of the Jacobi conditions agree."""

    def test_fifty_random_structures(self):
        rng = random.Random(5)
        tester = ZeroTester.seeded(5)
        for _ in range(50):
            structure = random_structure(rng)
            report = is_jacobi_manifold(structure, tester)
            assert report.get("formulations-agree").verdict is Verdict.PASS, structure


class TestAutomorphismFamilies:
    """Random members of every parametric family are automorphisms."""

    @pytest.mark.parametrize("name", PARAMETRIC)
    def test_fifty_instances_per_branch(self, name, repository):
        tester = ZeroTester.seeded(7)
        algebra = repository.get_algebra(name)
        family = automorphism_family(algebra, repository)
        rng = random.Random(name)
        for branch in range(len(family.branches)):
            for _ in range(50):
                matrix = random_instance(family, rng, branch=branch)
                assert is_automorphism(algebra, matrix, tester), (branch, matrix)
                assert matrix_identities_check(algebra, matrix, tester).passed, (branch, matrix)

    @pytest.mark.parametrize("name", PARAMETRIC)
    def test_products_stay_in_the_group(self, name, repository):
        tester = ZeroTester.seeded(11)
        algebra = repository.get_algebra(name)
        family = automorphism_family(algebra, repository)
        rng = random.Random(name)
        for branch in range(len(family.branches)):
            for _ in range(10):
                first = random_instance(family, rng, branch=branch)
                second = random_instance(family, rng, branch=branch)
                assert is_automorphism(algebra, first * second, tester), (first, second)


class TestAutomorphismClosure:
    """Automorphisms map solutions to solutions."""

    @pytest.mark.parametrize("name", PARAMETRIC)
    def test_transformed_families_still_solve(self, name, repository):
        tester = ZeroTester.seeded(3)
        algebra = repository.get_algebra(name)
        family = automorphism_family(algebra, repository)
        rng = random.Random(f"closure-{name}")
        rows = repository.list_rows(name)
        for _ in range(20):
            matrix = random_instance(family, rng, branch=rng.randrange(len(family.branches)))
            for row in rows:
                image = transform(row.family, matrix)
                assert verify_family(algebra, image, tester).verdict is not Verdict.FAIL, (row.id, matrix)


class TestWholeCatalog:
    """End-to-end runs over the bundled catalog."""

    def test_verify_every_table(self, repository, tester):
        report = verify_table(None, repository, tester)
        assert report.passed, [r.name for r in report.records if not r.ok]

    @pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 6])
    def test_every_example(self, number, repository, tester):
        report = verify_example(number, repository, tester)
        assert report.exit_code == 0, [r.name for r in report.records if r.verdict is Verdict.FAIL]

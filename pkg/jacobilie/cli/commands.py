"""
CLI commands for JacobiLie.

Every verification command builds a Report, prints it as a table (or as
JSON under --json), optionally saves the JSON to --output, and exits 1 when
a record failed. Unknown catalog names and malformed arguments exit 2.
"""

import json
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional

import sympy
import typer
from rich.console import Console
from rich.markup import escape

from jacobilie.cli.app_context import AppContext
from jacobilie.cli.formatters import CatalogFormatter, ReportFormatter
from jacobilie.config import configure_logging, settings
from jacobilie.errors import (
    ExpressionSyntaxError,
    JacobiError,
    PositiveDimensional,
    UnknownAlgebra,
    UnknownExample,
    UnknownGroup,
    UnknownRow,
)
from jacobilie.group_geom import is_jacobi_manifold, lift_to_group, maurer_cartan_check
from jacobilie.hamsys import (
    check_example_manifold,
    commutator,
    hamiltonian_vf,
    jacobi_bracket,
    lie_system_of,
    verify_example,
)
from jacobilie.jacobi_alg import (
    are_equivalent,
    grid_enumerate,
    reduction_check,
    residual_polynomials,
    solve_determined,
    verify_table,
)
from jacobilie.jacobi_alg.grid import generic_structure
from jacobilie.liealg import check_structure
from jacobilie.models import (
    AlgJacobiStructure,
    LieAlgebra,
    Relation,
    Report,
    Verdict,
    verdict_for,
    weakest,
)
from jacobilie.storage import ReportStorage
from jacobilie.symexpr import normalize, parse, substitute, to_text
from jacobilie.symexpr.symbols import symbol

console = Console()
logger = logging.getLogger(__name__)

app = typer.Typer(
    name="jacobilie",
    help="Jacobi structures on real two- and three-dimensional Lie groups",
    add_completion=False,
)
catalog_app = typer.Typer(help="Browse the Lie algebra catalog", add_completion=False)
app.add_typer(catalog_app, name="catalog")

UNKNOWN_NAME_ERRORS = (UnknownAlgebra, UnknownRow, UnknownGroup, UnknownExample)

JSON_OPTION = typer.Option(False, "--json", help="Print the report as JSON")
SEED_OPTION = typer.Option(None, "--seed", help="Seed for all random sampling")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Also write the JSON report to this path")
BIND_OPTION = typer.Option(None, "--bind", "-b", help="Bind a symbol: NAME=EXPR (repeatable)")


def get_context() -> AppContext:
    """Return the initialized application context, loading the catalog on first use."""
    ctx = AppContext.get_instance()
    if not ctx.is_initialized:
        try:
            ctx.initialize(auto_load=True)
        except Exception as e:
            console.print(f"[red]Error initializing application: {escape(str(e))}[/red]")
            raise typer.Exit(code=1)
        stats = ctx.load_stats
        if stats is not None and stats.failed_records:
            console.print(f"[yellow]Warning: {stats.failed_records} catalog record(s) failed to load[/yellow]")
    return ctx


def parse_bindings(items: Optional[List[str]]) -> Dict[sympy.Symbol, sympy.Expr]:
    """
    Parse repeated NAME=EXPR options.

    Raises:
        typer.BadParameter: On a missing "=" or an unparsable expression
    """
    bindings: Dict[sympy.Symbol, sympy.Expr] = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name.strip() or not value.strip():
            raise typer.BadParameter(f"Expected NAME=EXPR, got {item!r}", param_hint="--bind")
        bindings[symbol(name.strip())] = parse_expression(value, "--bind")
    return bindings


def parse_expression(text: str, hint: str, extra: Optional[Dict[str, sympy.Expr]] = None) -> sympy.Expr:
    try:
        return parse(text, extra)
    except ExpressionSyntaxError as e:
        raise typer.BadParameter(str(e), param_hint=hint)


def emit(report: Report, as_json: bool, output: Optional[Path]) -> None:
    """Print a report and optionally persist it."""
    if as_json:
        typer.echo(json.dumps(report.to_dict(), indent=2))
    else:
        console.print(ReportFormatter(terminal_width=console.width).format(report))
    if output is not None:
        path = ReportStorage().save(report, output)
        if not as_json:
            console.print(f"Report written to {escape(str(path))}")


def run_report(build: Callable[[], Report], as_json: bool, output: Optional[Path]) -> None:
    """
    Build, print and exit with the report's status.

    Unknown catalog names exit 2; other domain errors and unexpected failures exit 1.
    """
    try:
        report = build()
    except UNKNOWN_NAME_ERRORS as e:
        console.print(f"[red]Error: {escape(str(e))}[/red]")
        raise typer.Exit(code=2)
    except (JacobiError, ValueError) as e:
        console.print(f"[red]Error: {escape(str(e))}[/red]")
        raise typer.Exit(code=1)
    except (typer.BadParameter, typer.Exit):
        raise
    except Exception as e:
        logger.exception("Unexpected error while building a report")
        console.print(f"[red]Unexpected error: {escape(str(e))}[/red]")
        raise typer.Exit(code=1)
    try:
        emit(report, as_json, output)
    except JacobiError as e:
        console.print(f"[red]Error saving report: {escape(str(e))}[/red]")
        raise typer.Exit(code=1)
    raise typer.Exit(code=report.exit_code)


def _algebra_for(ctx: AppContext, name: str, bindings: Dict[sympy.Symbol, sympy.Expr]) -> LieAlgebra:
    """The named algebra, with its Bianchi parameter fixed when it is bound."""
    algebra = ctx.repository.get_algebra(name)
    if algebra.is_parametric and symbol(algebra.parameter) in bindings:
        return algebra.instantiate(bindings[symbol(algebra.parameter)])
    return algebra


def _structure_for(ctx: AppContext, algebra: str, identifier: str, hint: str) -> AlgJacobiStructure:
    row, structure = ctx.repository.find_structure(identifier)
    if row.algebra != algebra:
        raise typer.BadParameter(f"{identifier} belongs to {row.algebra}, not {algebra}", param_hint=hint)
    return structure


# Catalog


@catalog_app.command("list")
def catalog_list(as_json: bool = JSON_OPTION):
    """
    List the catalogued Lie algebras with their brackets.

    Examples:
        jacobilie catalog list
        jacobilie catalog list --json
    """
    ctx = get_context()
    algebras = ctx.repository.list_algebras()
    if as_json:
        typer.echo(json.dumps([a.to_dict() for a in algebras], indent=2))
        return
    console.print(CatalogFormatter(terminal_width=console.width).format_list(algebras))


@catalog_app.command("show")
def catalog_show(
    name: str = typer.Argument(..., help="Algebra name, e.g. III or VIa"),
    as_json: bool = JSON_OPTION,
):
    """
    Show one algebra: brackets, parameter range and catalogued Jacobi structures.

    Examples:
        jacobilie catalog show III
    """
    ctx = get_context()
    try:
        algebra = ctx.repository.get_algebra(name)
    except UnknownAlgebra as e:
        console.print(f"[red]Error: {escape(str(e))}[/red]")
        raise typer.Exit(code=2)
    rows = ctx.repository.list_rows(algebra.name)
    if as_json:
        data = algebra.to_dict()
        data["rows"] = [row.to_dict() for row in rows]
        typer.echo(json.dumps(data, indent=2))
        return
    text = CatalogFormatter(terminal_width=console.width).format_algebra(algebra, rows)
    console.print(text, markup=False, highlight=False)


# Lie algebra level


@app.command("check-structure")
def check_structure_command(
    name: str = typer.Argument(..., help="Algebra name"),
    as_json: bool = JSON_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Check antisymmetry and the Jacobi identity of an algebra's structure constants.

    Examples:
        jacobilie check-structure VIa
    """
    ctx = get_context()
    run_report(lambda: check_structure(ctx.repository.get_algebra(name), ctx.tester(seed)), as_json, output)


@app.command("verify-table")
def verify_table_command(
    algebra: Optional[str] = typer.Option(None, "--algebra", "-a", help="Only this algebra's rows"),
    as_json: bool = JSON_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Verify that every catalogued family and class solves the Jacobi equations.

    Examples:
        jacobilie verify-table
        jacobilie verify-table --algebra III --json
    """
    ctx = get_context()
    run_report(lambda: verify_table(algebra, ctx.repository, ctx.tester(seed)), as_json, output)


@app.command("equivalence")
def equivalence_command(
    algebra: str = typer.Option(..., "--algebra", "-a", help="Algebra name"),
    source: str = typer.Option(..., "--from", help="Row or class id of the structure to transform"),
    target: str = typer.Option(..., "--to", help="Row or class id of the target structure"),
    bind: Optional[List[str]] = BIND_OPTION,
    random_search: bool = typer.Option(
        False, "--random-search", help="Sample small integer matrices for constraint-only families"
    ),
    as_json: bool = JSON_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Search an automorphism A with TO = transform(FROM, A).

    Free parameters of both structures must be bound.

    Examples:
        jacobilie equivalence --algebra III --from III.2 --to III.2.a --bind l12=0 --bind l13=2 --bind l23=5
    """
    ctx = get_context()
    bindings = parse_bindings(bind)

    def build() -> Report:
        lie = _algebra_for(ctx, algebra, bindings)
        first = _structure_for(ctx, algebra, target, "--to").substitute(bindings)
        second = _structure_for(ctx, algebra, source, "--from").substitute(bindings)
        report = Report(command=f"equivalence --algebra {algebra} --from {source} --to {target}")
        for label, structure in ((source, second), (target, first)):
            broken = [c.text() for c in structure.conditions if c.holds({}) is False]
            if broken:
                report.notes.append(f"{label}: side conditions violated: " + "; ".join(broken))
        result = are_equivalent(
            lie, first, second, ctx.repository,
            allow_random_search=random_search, rng=ctx.rng(seed),
        )
        report.data["equivalence"] = result.to_dict()
        if result.equivalent:
            report.add(
                "equivalence",
                Verdict.PASS,
                f"equivalent via {result.method}" + (f" ({result.branch})" if result.branch else ""),
                "A = " + str(result.to_dict()["witness"]),
            )
        elif result.certified:
            report.add("equivalence", Verdict.PASS, "not equivalent (no automorphism exists)")
        else:
            report.add("equivalence", Verdict.DISCREPANCY, "no automorphism found; search was not exhaustive")
        return report

    run_report(build, as_json, output)


@app.command("solve")
def solve_command(
    algebra: str = typer.Option(..., "--algebra", "-a", help="Algebra name"),
    row: Optional[str] = typer.Option(None, "--row", "-r", help="Start from a row or class instead of the generic pair"),
    bind: Optional[List[str]] = BIND_OPTION,
    nonzero: Optional[List[str]] = typer.Option(None, "--nonzero", help="Expression that must not vanish (repeatable)"),
    as_json: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Solve the Jacobi equations after binding enough parameters.

    Every returned solution is substituted back into the residuals.

    Examples:
        jacobilie solve --algebra III --bind l12=0 --bind l13=2 --bind l23=5 --bind e1=0
    """
    ctx = get_context()
    bindings = parse_bindings(bind)
    guards = [parse_expression(text, "--nonzero") for text in nonzero or []]

    def build() -> Report:
        lie = _algebra_for(ctx, algebra, bindings)
        if lie.is_parametric:
            raise typer.BadParameter(f"bind the algebra parameter {lie.parameter}", param_hint="--bind")
        start = _structure_for(ctx, algebra, row, "--row") if row else generic_structure(lie.dim)
        structure = start.substitute(bindings)
        polys = list(residual_polynomials(lie, structure))
        conditions = [substitute(g, bindings) for g in guards]
        for condition in structure.conditions:
            if condition.relation is Relation.ZERO:
                polys.append(condition.expr)
            else:
                conditions.append(condition.expr)

        unknowns = structure.parameters
        report = Report(command=f"solve --algebra {algebra}" + (f" --row {row}" if row else ""))
        try:
            result = solve_determined(polys, unknowns, conditions)
        except PositiveDimensional as e:
            report.add("solve", Verdict.FAIL, str(e), "bind more parameters")
            return report
        report.data["solve"] = result.to_dict()
        if not result.solutions:
            report.add("solve", Verdict.PASS, "no real solutions")
        for index, solution in enumerate(result.solutions, 1):
            member = structure.substitute(solution)
            residual = [normalize(p) for p in residual_polynomials(lie, member)]
            verdict = Verdict.PASS if all(r == 0 for r in residual) else Verdict.FAIL
            report.add(f"solution {index}", verdict, str(member))
        if not result.complete:
            report.add("completeness", Verdict.DISCREPANCY, "a univariate factor of degree above two was not solved")
        return report

    run_report(build, as_json, output)


@app.command("grid-enumerate")
def grid_enumerate_command(
    algebra: str = typer.Option(..., "--algebra", "-a", help="Algebra name"),
    grid: Optional[str] = typer.Option(None, "--grid", "-g", help="Comma-separated entry values, e.g. -2,-1,0,1,2"),
    parameter: Optional[int] = typer.Option(None, "--parameter", help="Value of the Bianchi parameter a"),
    as_json: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Enumerate small-integer Jacobi structures and match them to the catalog.

    Examples:
        jacobilie grid-enumerate --algebra II
        jacobilie grid-enumerate --algebra VIa --parameter 3 --grid -1,0,1
    """
    ctx = get_context()
    values = None
    if grid:
        try:
            values = [int(v) for v in grid.split(",") if v.strip()]
        except ValueError:
            raise typer.BadParameter(f"Expected comma-separated integers, got {grid!r}", param_hint="--grid")
    run_report(lambda: grid_enumerate(algebra, values, ctx.repository, parameter), as_json, output)


@app.command("reduction")
def reduction_command(
    name: str = typer.Argument("III", help="Catalogued reduction"),
    as_json: bool = JSON_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Verify the catalogued reduction of a family to its class representatives.

    Examples:
        jacobilie reduction III
    """
    ctx = get_context()
    run_report(lambda: reduction_check(name, ctx.repository, ctx.tester(seed)), as_json, output)


# Group level


@app.command("lift")
def lift_command(
    algebra: str = typer.Option(..., "--algebra", "-a", help="Algebra (and group) name"),
    row: str = typer.Option(..., "--row", "-r", help="Row or class id"),
    bind: Optional[List[str]] = BIND_OPTION,
    as_json: bool = JSON_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Lift an algebra-level structure to the group and check it there.

    Examples:
        jacobilie lift --algebra III --row III.1.a
    """
    ctx = get_context()
    bindings = parse_bindings(bind)

    def build() -> Report:
        lie = _algebra_for(ctx, algebra, bindings)
        structure = _structure_for(ctx, algebra, row, "--row").substitute(bindings)
        vielbein = ctx.repository.get_vielbein(algebra)
        tester = ctx.tester(seed)
        lifted = lift_to_group(structure, vielbein)
        report = Report(command=f"lift --algebra {algebra} --row {row}")
        report.extend(maurer_cartan_check(vielbein, lie, tester))
        report.extend(is_jacobi_manifold(lifted, tester), prefix="manifold ")
        report.data["vielbein"] = vielbein.to_dict()
        report.data["lifted"] = lifted.to_dict()
        return report

    run_report(build, as_json, output)


@app.command("check-manifold")
def check_manifold_command(
    example: int = typer.Option(..., "--example", "-e", help="Example number"),
    as_json: bool = JSON_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Check the Jacobi manifold conditions of an example's printed structures.

    Examples:
        jacobilie check-manifold --example 3
    """
    ctx = get_context()
    run_report(lambda: check_example_manifold(example, ctx.repository, ctx.tester(seed)), as_json, output)


# Hamiltonian systems


@app.command("example")
def example_command(
    number: int = typer.Argument(..., help="Example number"),
    as_json: bool = JSON_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Reproduce a Jacobi-Lie Hamiltonian system end to end.

    Examples:
        jacobilie example 6 --json
    """
    ctx = get_context()
    run_report(lambda: verify_example(number, ctx.repository, ctx.tester(seed)), as_json, output)


def _example_function(ctx: AppContext, number: int, text: str, hint: str) -> sympy.Expr:
    """Parse a function in the example's printed variables (y, z map to x2, x3 where used)."""
    example = ctx.repository.get_example(number)
    extra = {name: symbol(target) for name, target in example.substitutions.items()}
    return parse_expression(text, hint, extra)


@app.command("bracket")
def bracket_command(
    example: int = typer.Option(..., "--example", "-e", help="Example number"),
    f: str = typer.Option(..., "--f", help="First function"),
    g: str = typer.Option(..., "--g", help="Second function"),
    as_json: bool = JSON_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Jacobi bracket {f, g} on an example's group, with the morphism check
    [X_f, X_g] = X_{f,g}.

    Examples:
        jacobilie bracket --example 6 --f "sin(x3)" --g "1"
    """
    ctx = get_context()

    def build() -> Report:
        fn = _example_function(ctx, example, f, "--f")
        gn = _example_function(ctx, example, g, "--g")
        catalogued = ctx.repository.get_example(example)
        lifted = lift_to_group(catalogued.structure, ctx.repository.get_vielbein(catalogued.group))
        tester = ctx.tester(seed)
        value = jacobi_bracket(lifted, fn, gn)
        report = Report(command=f"bracket --example {example} --f {f} --g {g}")
        report.add("bracket", Verdict.PASS, f"{{f, g}} = {to_text(value)}")
        defect = commutator(hamiltonian_vf(lifted, fn), hamiltonian_vf(lifted, gn)) - hamiltonian_vf(lifted, value)
        verdicts = []
        detail = []
        for mu, component in enumerate(defect.components, 1):
            result = tester.test(component)
            verdicts.append(verdict_for(result))
            if not result.is_zero:
                detail.append(f"component {mu}: {to_text(normalize(component))}")
        report.add("morphism", weakest(verdicts), *detail)
        report.data["bracket"] = to_text(value)
        return report

    run_report(build, as_json, output)


@app.command("hvf")
def hvf_command(
    example: int = typer.Option(..., "--example", "-e", help="Example number"),
    f: str = typer.Option(..., "--f", help="Hamiltonian function"),
    as_json: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    Hamiltonian vector field X_f on an example's group.

    Examples:
        jacobilie hvf --example 1 --f "exp(-x2)"
    """
    ctx = get_context()

    def build() -> Report:
        fn = _example_function(ctx, example, f, "--f")
        catalogued = ctx.repository.get_example(example)
        lifted = lift_to_group(catalogued.structure, ctx.repository.get_vielbein(catalogued.group))
        field = hamiltonian_vf(lifted, fn)
        report = Report(command=f"hvf --example {example} --f {f}")
        report.add(
            "hamiltonian-vector-field",
            Verdict.PASS,
            *[f"X^{mu} = {to_text(c)}" for mu, c in enumerate(field.components, 1)],
        )
        report.data["field"] = field.to_list()
        return report

    run_report(build, as_json, output)


@app.command("lie-system")
def lie_system_command(
    example: int = typer.Option(..., "--example", "-e", help="Example number"),
    as_json: bool = JSON_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """
    The time-dependent Jacobi-Lie system sum a_i(t) X_i of an example and its Hamiltonian.

    Examples:
        jacobilie lie-system --example 4
    """
    ctx = get_context()

    def build() -> Report:
        system = lie_system_of(example, ctx.repository, ctx.tester(seed))
        report = Report(command=f"lie-system --example {example}")
        report.add("closure", Verdict.PASS if system.closed else Verdict.FAIL, *system.bracket_lines())
        report.add(
            "matched-algebra",
            Verdict.PASS if system.matched_algebra else Verdict.DISCREPANCY,
            system.matched_algebra or "no catalog algebra has this table",
        )
        report.add(
            "hamiltonian",
            Verdict.PASS if system.hamiltonian_verified else Verdict.FAIL,
            f"h = {to_text(system.hamiltonian)}",
        )
        report.data["lie_system"] = system.to_dict()
        return report

    run_report(build, as_json, output)


@app.command()
def info():
    """
    Show application and catalog information.
    """
    ctx = get_context()
    repository = ctx.repository
    console.print(f"[bold cyan]{settings.app_name}[/bold cyan] v{settings.app_version}")
    console.print(settings.app_description)
    console.print("")
    console.print(f"Catalog directory: {escape(str(settings.get_catalog_dir()))}")
    console.print(f"Algebras: {len(repository.list_algebras())}")
    console.print(f"Table rows: {len(repository.list_rows())}")
    console.print(f"Vielbeins: {len(repository.list_vielbeins())}")
    console.print(f"Examples: {len(repository.list_examples())}")
    if ctx.load_stats:
        console.print(f"Loaded in {ctx.load_stats.duration_ms:.1f}ms ({ctx.load_stats.success_rate:.0f}% of records)")


def version_callback(value: bool):
    """Print version and exit."""
    if value:
        console.print(f"{settings.app_name} version {settings.app_version}")
        raise typer.Exit()


@app.callback()
def main(
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        "-v",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Logging level (default from JACOBI_LOG_LEVEL)"),
):
    """
    JacobiLie - verify Jacobi structures on low-dimensional Lie groups.
    """
    try:
        configure_logging(log_level.upper() if log_level else None)
    except ValueError:
        raise typer.BadParameter(f"Unknown log level: {log_level}", param_hint="--log-level")

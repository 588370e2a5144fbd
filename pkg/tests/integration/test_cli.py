"""
Integration tests for CLI commands.

Tests the CLI end to end with Typer's CliRunner against the bundled catalog.
"""

import json

import pytest
import typer
from typer.testing import CliRunner

from jacobilie.cli.app_context import AppContext
from jacobilie.cli.commands import app, run_report
from jacobilie.storage import ReportStorage

III_MEMBER = ["--bind", "l12=0", "--bind", "l13=2", "--bind", "l23=5"]


@pytest.fixture(autouse=True)
def reset_context():
    """Reset AppContext before each test."""
    AppContext.reset_instance()
    yield
    AppContext.reset_instance()


@pytest.fixture
def cli_runner():
    """Create a Typer CLI runner."""
    return CliRunner()


def as_json(result) -> dict:
    return json.loads(result.stdout)


class TestCatalogCommands:
    """Tests for catalog list and show."""

    def test_list(self, cli_runner):
        result = cli_runner.invoke(app, ["catalog", "list"])
        assert result.exit_code == 0
        assert "Lie algebras (13 total)" in result.stdout

    def test_list_json(self, cli_runner):
        result = cli_runner.invoke(app, ["catalog", "list", "--json"])
        assert result.exit_code == 0
        names = [a["name"] for a in json.loads(result.stdout)]
        assert names[:3] == ["A1", "A2", "I"]
        assert len(names) == 13

    def test_show(self, cli_runner):
        result = cli_runner.invoke(app, ["catalog", "show", "III"])
        assert result.exit_code == 0
        assert "[X1, X2] = -X2 - X3" in result.stdout
        assert "III.2.a" in result.stdout

    def test_show_unknown(self, cli_runner):
        result = cli_runner.invoke(app, ["catalog", "show", "XI"])
        assert result.exit_code == 2
        assert "Unknown algebra" in result.stdout


class TestAlgebraCommands:
    """Tests for the Lie algebra level commands."""

    def test_check_structure(self, cli_runner):
        result = cli_runner.invoke(app, ["check-structure", "VIa", "--json"])
        assert result.exit_code == 0
        assert [r["name"] for r in as_json(result)["records"]] == ["antisymmetry", "jacobi-identity"]

    def test_check_structure_unknown(self, cli_runner):
        assert cli_runner.invoke(app, ["check-structure", "XI"]).exit_code == 2

    def test_verify_table(self, cli_runner):
        result = cli_runner.invoke(app, ["verify-table", "--algebra", "III", "--json"])
        assert result.exit_code == 0
        data = as_json(result)
        assert data["verdict"] in ("pass", "numeric-pass", "discrepancy")
        assert "family III.2" in [r["name"] for r in data["records"]]

    def test_equivalence_to_class_representative(self, cli_runner):
        result = cli_runner.invoke(
            app,
            ["equivalence", "--algebra", "III", "--from", "III.2.a", "--to", "III.2", *III_MEMBER, "--json"],
        )
        assert result.exit_code == 0
        data = as_json(result)
        assert data["data"]["equivalence"]["equivalent"] is True
        assert data["data"]["equivalence"]["certified"] is True

    def test_inequivalent_classes(self, cli_runner):
        result = cli_runner.invoke(
            app, ["equivalence", "--algebra", "III", "--from", "III.2.a", "--to", "III.2.b", "--json"]
        )
        assert result.exit_code == 0
        data = as_json(result)
        assert data["data"]["equivalence"]["equivalent"] is False
        assert data["records"][0]["detail"] == ["not equivalent (no automorphism exists)"]

    def test_equivalence_wrong_algebra(self, cli_runner):
        result = cli_runner.invoke(app, ["equivalence", "--algebra", "II", "--from", "III.2.a", "--to", "III.2.b"])
        assert result.exit_code == 2

    def test_solve(self, cli_runner):
        result = cli_runner.invoke(
            app, ["solve", "--algebra", "III", *III_MEMBER, "--bind", "e1=0", "--json"]
        )
        assert result.exit_code == 0
        data = as_json(result)
        assert data["data"]["solve"]["solutions"] == [{"e2": "-2", "e3": "2"}]
        assert data["records"][0]["name"] == "solution 1"

    def test_solve_underdetermined(self, cli_runner):
        result = cli_runner.invoke(app, ["solve", "--algebra", "A1", "--json"])
        assert result.exit_code == 1
        assert "bind more parameters" in as_json(result)["records"][0]["detail"]

    def test_solve_parametric_algebra_needs_parameter(self, cli_runner):
        assert cli_runner.invoke(app, ["solve", "--algebra", "VIa"]).exit_code == 2

    def test_grid_enumerate(self, cli_runner):
        result = cli_runner.invoke(app, ["grid-enumerate", "--algebra", "A2", "--grid=-1,0,1", "--json"])
        assert result.exit_code == 0
        data = as_json(result)
        assert data["data"]["solutions"] == 15
        assert data["data"]["unmatched"] == []

    def test_grid_enumerate_bad_grid(self, cli_runner):
        result = cli_runner.invoke(app, ["grid-enumerate", "--algebra", "A2", "--grid", "a,b"])
        assert result.exit_code == 2

    def test_reduction(self, cli_runner):
        result = cli_runner.invoke(app, ["reduction", "--json"])
        assert result.exit_code == 0
        assert "case 3 poisson" in [r["name"] for r in as_json(result)["records"]]

    def test_bad_binding(self, cli_runner):
        result = cli_runner.invoke(app, ["solve", "--algebra", "III", "--bind", "l12"])
        assert result.exit_code == 2


class TestGroupCommands:
    """Tests for lifting and the manifold checks."""

    def test_lift(self, cli_runner):
        result = cli_runner.invoke(app, ["lift", "--algebra", "III", "--row", "III.1.a", "--json"])
        assert result.exit_code == 0
        data = as_json(result)
        assert data["data"]["lifted"]["reeb"] == ["0", "0", "-1"]
        assert "maurer-cartan" in [r["name"] for r in data["records"]]

    def test_lift_without_vielbein(self, cli_runner):
        result = cli_runner.invoke(app, ["lift", "--algebra", "V", "--row", "V.1.a"])
        assert result.exit_code == 2
        assert "No vielbein" in result.stdout

    def test_check_manifold(self, cli_runner):
        result = cli_runner.invoke(app, ["check-manifold", "--example", "3", "--json"])
        assert result.exit_code == 0
        assert "formulations-agree" in [r["name"] for r in as_json(result)["records"]]


class TestHamiltonianCommands:
    """Tests for the example, bracket, hvf and lie-system commands."""

    def test_example(self, cli_runner):
        result = cli_runner.invoke(app, ["example", "6", "--json"])
        assert result.exit_code == 0
        names = [r["name"] for r in as_json(result)["records"]]
        assert "bracket {f1, f3}" in names
        assert "bracket {f2, f3}" in names
        assert "matched-algebra" in names

    @pytest.mark.parametrize("number", ["1", "3", "5"])
    def test_example_exit_code(self, cli_runner, number):
        assert cli_runner.invoke(app, ["example", number, "--json"]).exit_code == 0

    def test_unknown_example(self, cli_runner):
        assert cli_runner.invoke(app, ["example", "99"]).exit_code == 2

    def test_hvf(self, cli_runner):
        result = cli_runner.invoke(app, ["hvf", "--example", "2", "--f", "x2", "--json"])
        assert result.exit_code == 0
        assert as_json(result)["data"]["field"] == ["x2", "0", "1"]

    def test_bracket(self, cli_runner):
        result = cli_runner.invoke(
            app, ["bracket", "--example", "2", "--f", "x2", "--g", "(x2*x3 + x1)/(2*x2**2)", "--json"]
        )
        assert result.exit_code == 0
        data = as_json(result)
        assert data["data"]["bracket"] == "1/x2"
        assert data["records"][1]["verdict"] in ("pass", "numeric-pass")

    def test_bracket_bad_expression(self, cli_runner):
        result = cli_runner.invoke(app, ["bracket", "--example", "2", "--f", "x2 +", "--g", "1"])
        assert result.exit_code == 2

    def test_lie_system(self, cli_runner):
        result = cli_runner.invoke(app, ["lie-system", "--example", "2", "--json"])
        assert result.exit_code == 0
        system = as_json(result)["data"]["lie_system"]
        assert system["matched_algebra"] == "II"
        assert system["hamiltonian_verified"] is True


class TestApplicationOptions:
    """Tests for info, --version, --log-level and --output."""

    def test_info(self, cli_runner):
        result = cli_runner.invoke(app, ["info"])
        assert result.exit_code == 0
        assert "Algebras: 13" in result.stdout
        assert "Examples: 6" in result.stdout

    def test_version(self, cli_runner):
        result = cli_runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert "JacobiLie version 1.0.0" in result.stdout

    def test_bad_log_level(self, cli_runner):
        assert cli_runner.invoke(app, ["--log-level", "bogus", "info"]).exit_code == 2

    def test_output_file(self, cli_runner, tmp_path):
        target = tmp_path / "reports" / "iii.json"
        result = cli_runner.invoke(app, ["verify-table", "--algebra", "III", "--output", str(target)])
        assert result.exit_code == 0
        assert "Report written to" in result.stdout
        report = ReportStorage().load(target)
        assert report.command == "verify-table --algebra III"
        assert report.exit_code == 0

    @pytest.mark.parametrize("command", [
        ["grid-enumerate", "--algebra", "A2"],
        ["solve", "--algebra", "A2"],
        ["hvf", "--example", "2", "--f", "x2"],
    ])
    def test_exact_commands_take_no_seed(self, cli_runner, command):
        assert cli_runner.invoke(app, command + ["--seed", "1"]).exit_code == 2


class TestRunReport:
    """Tests for the shared build-print-exit helper."""

    def test_unexpected_error_exits_one(self):
        def build():
            raise RuntimeError("boom")

        with pytest.raises(typer.Exit) as exc_info:
            run_report(build, as_json=False, output=None)
        assert exc_info.value.exit_code == 1

    def test_bad_parameter_is_left_to_click(self):
        def build():
            raise typer.BadParameter("bad value", param_hint="--bind")

        with pytest.raises(typer.BadParameter):
            run_report(build, as_json=False, output=None)

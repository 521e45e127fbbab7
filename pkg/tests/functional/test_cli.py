"""Functional tests for the CLI.

These tests use Click's CliRunner to invoke the commands against the tracked
solution and run-config files in tests/data/functional/rivercross/.
"""

import json
import pytest
from click.testing import CliRunner
from pytest import fixture

from rivercross.cli import cli
from rivercross.export import parse_solutions

from tests.conftest import DATA_DIR, WORKED_PERMUTATIONS

OUTPUT_DIR = DATA_DIR / "output"


@fixture
def cli_runner() -> CliRunner:
    """Pytest fixture for CLI runner."""
    return CliRunner()


def _data(name: str) -> str:
    return str(DATA_DIR / name)


# Test lifting the worked MC solution.
def test_lift_worked_solution(cli_runner: CliRunner) -> None:
    result = cli_runner.invoke(cli, ["lift", _data("mc_worked_solution.json")])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("solution=[w1 w2 w3 h1 h2 h3 |  : L] -> ")
    assert lines[1] == "permutations=" + ",".join(WORKED_PERMUTATIONS)
    assert lines[2] == (
        "cases=ii',i',ii',i',iv',vi',v',ii',i',ii',i'"
    )
    assert lines[3] == "rotation_subgroup=true"
    assert "[rivercross] LOADING solutions from:" in result.stderr


# Test lifting with the fiber.
@pytest.mark.parametrize("strategy", ["eager", "lazy"])
def test_lift_fiber(cli_runner: CliRunner, strategy: str) -> None:
    result = cli_runner.invoke(
        cli,
        [
            "lift",
            _data("mc_worked_solution.json"),
            "--fiber",
            "--strategy",
            strategy,
        ],
    )
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert "fiber=216" in lines
    assert "layers=1,3,3,1,3,3,3,3,1,3,3,1" in lines
    assert sum(1 for line in lines if line.startswith("layer ")) == 12


# Test lifting a states-only file.
def test_lift_states_only(cli_runner: CliRunner) -> None:
    result = cli_runner.invoke(
        cli,
        ["lift", _data("mc_worked_states_only.json"), "--format", "json"],
    )
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    assert document["b"] == 2
    assert document["permutations"] == list(WORKED_PERMUTATIONS)
    assert document["rotation_subgroup"] is True


# Test bad solution files exit with 1.
@pytest.mark.parametrize(
    "name,message",
    [
        ("mc_broken_step.json", "Solution 0: Step 2"),
        ("mc_unparsable.json", "Solution 0: Step 1"),
        ("not_a_solutions_file.json", "Invalid solutions document"),
        ("truncated.json", "Invalid JSON"),
        ("no_such_file.json", "File not found"),
        ("hw_worked_solution.json", "lift needs a file of MC solutions"),
    ],
)
def test_lift_bad_files(cli_runner: CliRunner, name: str, message: str):
    result = cli_runner.invoke(cli, ["lift", _data(name)])
    assert result.exit_code == 1
    assert "ERROR INVALID_INPUT" in result.stderr
    assert message in result.stderr
    assert result.stdout == ""


# Test a valid walk that is not a solution is refused.
@pytest.mark.parametrize("extra", [[], ["--fiber"], ["--format", "json"]])
def test_lift_partial_walk(cli_runner: CliRunner, extra) -> None:
    result = cli_runner.invoke(
        cli, ["lift", _data("mc_one_trip.json")] + extra
    )
    assert result.exit_code == 1
    assert "ERROR INVALID_INPUT" in result.stderr
    assert "does not run from the initial to the final state" in (
        result.stderr
    )
    assert result.stdout == ""


# Test an out-of-range solution index.
def test_lift_index_out_of_range(cli_runner: CliRunner) -> None:
    result = cli_runner.invoke(
        cli, ["lift", _data("mc_worked_solution.json"), "--index", "3"]
    )
    assert result.exit_code == 1
    assert "out of range" in result.stderr


# Test the fiber budget.
def test_lift_fiber_budget(cli_runner: CliRunner) -> None:
    result = cli_runner.invoke(
        cli,
        [
            "lift",
            _data("mc_worked_solution.json"),
            "--fiber",
            "--max-paths",
            "100",
        ],
    )
    assert result.exit_code == 1
    assert "BUDGET_EXCEEDED" in result.stderr


# Test solve defaults from a run-config file.
def test_solve_with_config(cli_runner: CliRunner) -> None:
    result = cli_runner.invoke(
        cli, ["solve", "--config", _data("run_config.yml")]
    )
    assert result.exit_code == 0
    assert result.stdout == "length=11 count=4\n"


# Test flags override the run-config file.
def test_flags_override_config(cli_runner: CliRunner) -> None:
    result = cli_runner.invoke(
        cli,
        ["solve", "--config", _data("run_config.yml"), "--flavor", "hw"],
    )
    assert result.exit_code == 0
    assert result.stdout == "length=11 count=486\n"


# Test budgets from the run-config file apply.
def test_config_budget_applies(cli_runner: CliRunner) -> None:
    result = cli_runner.invoke(
        cli,
        [
            "solve",
            "--config",
            _data("run_config.yml"),
            "--flavor",
            "hw",
            "--all",
            "--max-paths",
            "100",
        ],
    )
    assert result.exit_code == 1
    assert "Budget 'max_paths' exceeded (limit 100)" in result.stderr


# Test invalid and missing run-config files.
@pytest.mark.parametrize(
    "name", ["run_config_invalid.yml", "no_such_config.yml"]
)
def test_bad_config(cli_runner: CliRunner, name: str) -> None:
    result = cli_runner.invoke(cli, ["solve", "--config", _data(name)])
    assert result.exit_code == 1
    assert "ERROR INVALID_INPUT" in result.stderr


# Test solve writes a solutions file that lift reads back.
def test_solve_then_lift(cli_runner: CliRunner) -> None:
    target = OUTPUT_DIR / "mc3_solutions.json"
    try:
        result = cli_runner.invoke(
            cli,
            ["solve", "-n", "3", "--format", "json", "-o", str(target)],
        )
        assert result.exit_code == 0
        assert result.stdout == ""
        assert f"WROTE {target}" in result.stderr
        document = json.loads(target.read_text(encoding="utf-8"))
        assert document["count"] == 4
        assert len(parse_solutions(document).solutions) == 4

        for index in range(4):
            lifted = cli_runner.invoke(
                cli, ["lift", str(target), "--index", str(index), "--fiber"]
            )
            assert lifted.exit_code == 0
            assert "rotation_subgroup=" in lifted.stdout
    finally:
        if target.exists():
            target.unlink()


# Test the JSON payload of an infeasible instance.
def test_solve_infeasible_json(cli_runner: CliRunner) -> None:
    result = cli_runner.invoke(
        cli, ["solve", "-n", "5", "-b", "2", "--format", "json"]
    )
    assert result.exit_code == 2
    document = json.loads(result.stdout)
    assert document["count"] == 0
    assert document["solutions"] == []
    assert "component=13" in result.stderr


# Test exporting a fiber.
@pytest.mark.parametrize("fmt", ["dot", "json"])
def test_export_fiber(cli_runner: CliRunner, fmt: str) -> None:
    result = cli_runner.invoke(
        cli,
        [
            "export",
            "--fiber",
            _data("mc_worked_solution.json"),
            "--format",
            fmt,
        ],
    )
    assert result.exit_code == 0
    if fmt == "json":
        assert json.loads(result.stdout)["count"] == 216
    else:
        assert result.stdout.startswith('digraph "fiber" {')
        assert result.stdout.count("{ rank=same;") == 12


# Test exporting the optimal scheme to a file.
def test_export_optimal_to_file(cli_runner: CliRunner) -> None:
    target = OUTPUT_DIR / "hw3_optimal.dot"
    try:
        result = cli_runner.invoke(
            cli,
            ["export", "--flavor", "hw", "-n", "3", "--optimal", "-o",
             str(target)],
        )  # fmt: skip
        assert result.exit_code == 0
        text = target.read_text(encoding="utf-8")
        assert text.startswith('digraph "hw_n3_b2_optimal" {')
        assert text.count("{ rank=same;") == 12
    finally:
        if target.exists():
            target.unlink()


# Test exported DOT is stable between runs.
def test_export_deterministic(cli_runner: CliRunner) -> None:
    args = ["export", "--flavor", "hw", "-n", "2"]
    first = cli_runner.invoke(cli, args)
    second = cli_runner.invoke(cli, args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout

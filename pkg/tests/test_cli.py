from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from starcut.app.main import cli


@pytest.fixture
def runner():
    return CliRunner()


def test_gen(runner):
    result = runner.invoke(cli, ["gen", "3", "2"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 6
    assert lines[0] == "12: 21[swap_2] 32[unswap]"


def test_info(runner):
    result = runner.invoke(cli, ["info", "4", "3"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["vertices"] == 24 and payload["edges"] == 36
    assert payload["problems"] == []
    assert payload["theoremValues"]["1"]["theoremValue"] == 4
    assert payload["theoremValues"]["1"]["psiArm"] == "h<=k-2"
    assert payload["starGraph"]["superEdgeConnectivity1"] == 4


def test_decompose(runner):
    result = runner.invoke(cli, ["decompose", "5", "3", "2"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["ok"] is True
    assert payload["expectedCrossSize"] == 3


@pytest.mark.parametrize(
    "fmt,marker,count",
    [("dot", " -- ", 18), ("csv-edges", ",", 19)],
)
def test_export_s42(runner, fmt, marker, count):
    result = runner.invoke(cli, ["export", "4", "2", "--format", fmt])
    assert result.exit_code == 0
    assert sum(1 for line in result.stdout.splitlines() if marker in line) == count


def test_export_to_file(runner, tmp_path):
    target = tmp_path / "s32.json"
    result = runner.invoke(cli, ["--output", str(target), "export", "3", "2", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(target.read_text())["n"] == 3
    assert result.stdout == ""


def test_cut_full_clique(runner):
    result = runner.invoke(cli, ["cut", "5", "3", "2", "--alpha", "23", "--mode", "full"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["cutSize"] == 6
    assert payload["X"] == ["123", "423", "523"]


def test_cut_flagged_invalid_exits_1(runner):
    result = runner.invoke(cli, ["cut", "5", "2", "2"])
    assert result.exit_code == 1
    assert json.loads(result.stdout)["flagged"] is True


def test_lambda(runner):
    result = runner.invoke(cli, ["lambda", "4", "3"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["value"] == 3


def test_lambda_h(runner):
    result = runner.invoke(cli, ["lambda-h", "4", "2", "2", "--bruteforce"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["value"] == payload["theoremValue"] == payload["bruteforceValue"] == 3
    assert payload["exact"] is True


def test_lambda_h_out_of_theorem_range(runner):
    # k = 1 has no closed form; the solver still answers.
    result = runner.invoke(cli, ["lambda-h", "4", "1", "1"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["theoremValue"] is None


def test_verify_is_byte_identical(runner):
    first = runner.invoke(cli, ["verify", "--n-max", "4"])
    second = runner.invoke(cli, ["verify", "--n-max", "4"])
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    lines = first.stdout.splitlines()
    assert lines[0] == "n,k,h,theorem_value,solver_value,exact,match,elapsed_ms"
    assert len(lines) == 8
    assert "7 instances" in first.stderr


def test_verify_usage_error(runner):
    result = runner.invoke(cli, ["verify", "--n-max", "2"])
    assert result.exit_code == 2
    assert "n_max" in result.stderr


def test_lemma28(runner):
    result = runner.invoke(cli, ["lemma28", "4", "3", "1", "2"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["accountingHolds"] is True


def test_fault_trial(runner):
    result = runner.invoke(cli, ["--seed", "7", "fault-trial", "4", "2", "1", "--trials", "200"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["seed"] == 7
    assert payload["disconnections"] == 0


@pytest.mark.parametrize(
    "args",
    [["gen", "4", "4"], ["decompose", "4", "3", "1"], ["--budget-ms", "0", "lambda-h", "3", "2", "0"]],
)
def test_bad_parameters_exit_2(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert result.stderr.startswith("error:")


def test_verify_rejects_zero_vertex_cap(runner):
    result = runner.invoke(cli, ["verify", "--n-max", "4", "--max-vertices", "0"])
    assert result.exit_code == 2
    assert "max_vertices" in result.stderr

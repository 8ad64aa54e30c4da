"""Command-line client: output shape, determinism, exit codes."""

import json

import pytest
from click.testing import CliRunner

from infsym.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args):
    return runner.invoke(main, args, catch_exceptions=False)


def test_thoma_eval(runner):
    res = invoke(runner, ["thoma", "eval", "--alpha", "1/2,1/2",
                          "--cycles", "3"])
    assert res.exit_code == 0
    assert json.loads(res.output)["value"] == "1/4"


def test_hseries_expand(runner):
    res = invoke(runner, ["hseries", "expand", "--gamma", "1",
                          "--order", "4"])
    assert json.loads(res.output)["coeffs"] == [
        "1", "1", "1/2", "1/6", "1/24"]


def test_determinism(runner):
    a = invoke(runner, ["char", "table", "--n", "4"]).output
    b = invoke(runner, ["char", "table", "--n", "4"]).output
    assert a == b


def test_partition_info(runner):
    res = invoke(runner, ["partition", "info", "--parts", "4,2,1"])
    body = json.loads(res.output)
    assert body["dim_syt"] == 35 and body["z"] == 8


def test_input_error_exit_1(runner):
    res = invoke(runner, ["partition", "info", "--parts", "1,2"])
    assert res.exit_code == 1
    res = invoke(runner, ["char", "table", "--n", "100"])
    assert res.exit_code == 1
    res = invoke(runner, ["partition", "info", "--parts", "x"])
    assert res.exit_code == 1


def test_math_failure_exit_2(runner, tmp_path):
    f = tmp_path / "seq.json"
    f.write_text(json.dumps(["1", "1", "0", "1", "0", "0"]))
    res = invoke(runner, ["tp", "check", "--coeffs", str(f),
                          "--window", "5", "--order", "2"])
    assert res.exit_code == 2
    assert json.loads(res.output)["witness"]["value"] == "-1"


def test_tp_pass_exit_0(runner, tmp_path):
    f = tmp_path / "seq.json"
    f.write_text(json.dumps(["1"] * 8))
    res = invoke(runner, ["tp", "check", "--coeffs", str(f),
                          "--window", "5", "--order", "2"])
    assert res.exit_code == 0


def test_diagram_mul_and_verify(runner, tmp_path):
    ident = {
        "window": 1,
        "pairs": [{"a": "T+1", "b": "B+1", "len": "0"},
                  {"a": "T-1", "b": "B-1", "len": "0"}],
        "loops": ["3"],
    }
    f1 = tmp_path / "d1.json"
    f1.write_text(json.dumps(ident))
    res = invoke(runner, ["diagram", "mul", "--lhs", str(f1),
                          "--rhs", str(f1)])
    assert res.exit_code == 0
    assert json.loads(res.output)["diagram"]["loops"] == ["3", "3"]

    res = invoke(runner, ["diagram", "verify", "--window", "3",
                          "--triples", "10"])
    assert res.exit_code == 0


def test_cosets_commands(runner):
    res = invoke(runner, ["cosets", "census", "--n", "2"])
    assert json.loads(res.output)["counts"] == {"2": 16, "1,1": 8}
    res = invoke(runner, ["cosets", "thm4", "--x", "-1/3", "--n", "3",
                          "--brute"])
    assert json.loads(res.output)["closed"] == "-16/3"


def test_classify_exit_codes(runner, tmp_path):
    label = {
        "pair": "E", "depth": 1,
        "measure": {"atoms": [{"x": "-1/4", "mass": "1/2"}],
                    "zero_mass": "1/2"},
        "lambda": [{"x": "-1/4", "shape": [1, 1]}],
    }
    f = tmp_path / "label.json"
    f.write_text(json.dumps(label))
    assert invoke(runner, ["classify", "--label", str(f)]).exit_code == 0

    label["lambda"] = [{"x": "-1/4", "shape": [2]}]
    f.write_text(json.dumps(label))
    assert invoke(runner, ["classify", "--label", str(f)]).exit_code == 2

    f.write_text("{not json")
    assert invoke(runner, ["classify", "--label", str(f)]).exit_code == 1


def test_mixture_command(runner, tmp_path):
    triv = {
        "pair": "E", "depth": 0,
        "measure": {"atoms": [{"x": "1", "mass": "1"}], "zero_mass": "0"},
        "lambda": [],
    }
    spec = {"components": [{"label": triv, "weight": "1/2"},
                           {"label": triv, "weight": "1/2"}]}
    f = tmp_path / "spec.json"
    f.write_text(json.dumps(spec))
    res = invoke(runner, ["mixture", "--spec", str(f),
                          "--check-order", "12"])
    assert res.exit_code == 0
    assert json.loads(res.output)["moment_check"]


def test_ergodic_command(runner):
    res = invoke(runner, ["ergodic", "--alpha", "1/2,1/2", "--k", "2",
                          "--n", "10,20,40"])
    assert res.exit_code == 0
    rows = json.loads(res.output)["rows"]
    assert rows[-1]["deviation_float"] <= 0.1


def test_out_file(runner, tmp_path):
    out = tmp_path / "result.json"
    res = invoke(runner, ["--out", str(out), "thoma", "eval",
                          "--alpha", "1", "--cycles", "2"])
    assert res.exit_code == 0
    assert json.loads(out.read_text())["value"] == "1"


def test_selftest(runner):
    res = invoke(runner, ["selftest"])
    assert res.exit_code == 0
    assert json.loads(res.output)["status"] == "ok"

import json
import subprocess
import sys

import pytest

from ttmin.cli import MODELS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_min_ldt_parity3(capsys):
    code, out, _ = run(capsys, "min", "--model", "ldt", "--tt", "01101001")
    assert code == 0
    assert out.splitlines()[:2] == ["model: ldt", "size: 3"]
    assert "(node (lin 111 b=1)" in out


def test_min_rofxor_maj3_rejects(capsys):
    code, out, _ = run(capsys, "min", "--model", "rofxor", "--tt", "00010111")
    assert code == 2 and out.startswith("reject: indecomposable")
    code, out, _ = run(capsys, "min", "--model", "rofxor", "--tt", "00010111", "--json")
    assert code == 2 and json.loads(out)["reject"] == "indecomposable"


def test_min_json_and_flags(capsys):
    code, out, _ = run(capsys, "min", "--model", "obdd", "--tt", "00011011", "--json")
    data = json.loads(out)
    assert code == 0 and data["size"] == 3 and data["order"] == [1, 2, 3]
    code, out, _ = run(capsys, "min", "--model", "ldt-c", "--tt", "0110", "--c", "2")
    assert code == 0 and "size: 3" in out
    code, out, _ = run(capsys, "min", "--model", "rofxor-a", "--tt", "1001", "--a", "10")
    assert code == 0 and out.strip().endswith("(xor ~x1 x2)")
    code, out, _ = run(capsys, "min", "--model", "ml", "--tt", "0111")
    assert code == 0 and out.strip().endswith("x1 + x2 + x1*x2")


def test_every_model_runs(capsys, tmp_path):
    path = tmp_path / "and.tt"
    path.write_text("n=2\n0001\n")
    for model in MODELS:
        extra = {"ldt-c": ["--c", "1"], "rofxor-a": ["--a", "00"]}.get(model, [])
        code, out, _ = run(capsys, "min", "--model", model, "--file", str(path), *extra)
        assert code == 0, model
        assert f"model: {model}" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["min", "--model", "nope", "--tt", "0110"],
        ["min", "--model", "dt", "--tt", "011"],
        ["min", "--model", "dt"],
        ["min", "--model", "ldt-c", "--tt", "0110"],
        ["min", "--model", "dt", "--tt", "0110", "--max-n", "1"],
        ["min", "--model", "dt", "--tt", "0*10"],
        ["min", "--model", "srodt", "--tt", "0" * 32],
        ["verify", "nope"],
        ["eval", "--tt", "0110", "--a", "1"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as e:
        raise SystemExit(main(argv))
    assert e.value.code == 1


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--model", "f2a", "--tt", "01111110")
    assert code == 0 and "size: 4" in out
    code, out, _ = run(capsys, "oracle", "--model", "uf2", "--tt", "0110")
    assert code == 2
    code, _, _ = run(capsys, "oracle", "--model", "dt", "--tt", "0" * 16)
    assert code == 1


def test_gen(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "sc2tree", "--m", "2", "--sets", "1,2", "--k", "1")
    lines = out.splitlines()
    assert code == 0 and lines[:2] == ["n=2", "0011"]
    meta = json.loads(lines[2])
    assert meta["tests"] == [[2, 3]] and meta["u"] == 2
    prefix = tmp_path / "psc"
    code, _, _ = run(capsys, "gen", "3psc2dnf", "--m", "3", "--sets", "1,2,3", "--partition", "1;2;3",
                     "--k", "1", "--out", str(prefix))
    assert code == 0
    meta = json.loads((tmp_path / "psc.json").read_text())
    assert (meta["q"], meta["t"]) == (4, 12)
    assert (tmp_path / "psc.tt").read_text().startswith("n=12\n")
    a = run(capsys, "gen", "sc", "--seed", "7")
    b = run(capsys, "gen", "sc", "--seed", "7")
    assert a == b and '"seed": 7' in a[1]


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--tt", "0111", "--a", "10")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "eval", "--tt", "0111", "--a", "0,0", "--model", "dt", "--json")
    assert json.loads(out) == {"a": [0, 0], "model": "dt", "model_value": 0, "n": 2, "value": 0}


def test_verify_obdd_orders(capsys):
    code, out, _ = run(capsys, "verify", "obdd-orders")
    assert code == 0 and out.startswith("obdd-orders: pass")


def test_module_entry_point_help():
    proc = subprocess.run([sys.executable, "-m", "ttmin.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    for flag in ("min", "oracle", "gen", "verify", "eval"):
        assert flag in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "ttmin.cli", "min", "--help"], capture_output=True, text=True)
    for flag in ("--model", "--tt", "--file", "--c", "--order", "--a", "--json", "--max-n"):
        assert flag in proc.stdout

import io
import json
import subprocess
import sys

import pytest

from parityfactor import complete_graph, extremal_H, parse_graph, serialize_graph
from parityfactor.cli import execute, parse_args


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = execute(parse_args([str(a) for a in argv]), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {
        "k3": tmp_path / "k3.graph",
        "k6": tmp_path / "k6.graph",
        "h42": tmp_path / "h42.graph",
        "all1": tmp_path / "all-1.json",
        "one3": tmp_path / "one-three.txt",
    }
    paths["k3"].write_text(serialize_graph(complete_graph(3)))
    paths["k6"].write_text(serialize_graph(complete_graph(6)))
    paths["h42"].write_text(serialize_graph(extremal_H(4, 2)))
    paths["all1"].write_text(json.dumps({"g": [1, 1, 1], "f": [1, 1, 1]}))
    paths["one3"].write_text("all 1 3\n")
    return paths


def test_parse_examples():
    args = parse_args(["gen", "F", "--r", "4", "--h", "2", "--l", "4"])
    assert (args.command, args.kind, args.r, args.h, args.l) == ("gen", "F", 4, 2, 4)
    args = parse_args(["factor", "find", "g.graph", "--c", "c.json", "--json"])
    assert (args.command, args.action, args.json) == ("factor", "find", True)


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum"],
        ["bogus"],
        ["gen", "kn"],
        ["thm", "check", "g", "--c", "c", "--theta", "1/2", "--best-theta"],
        ["thm", "check", "g", "--c", "c", "--theta", "2"],
        ["factor", "check", "g", "--c", "c", "--method", "psychic"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        parse_args(argv)
    assert exc.value.code == 2


def test_tight():
    code, out, _ = run(["tight", "--r", 4, "--h", 2, "--l", 4])
    assert code == 0
    lines = out.splitlines()
    assert sum(line.startswith("PASS") for line in lines) == 4
    assert "deficiency = -2" in lines


def test_spectrum(files):
    code, out, _ = run(["spectrum", files["h42"]])
    assert code == 0
    assert out.splitlines()[0] == "3.64575131106"
    code, out, _ = run(["spectrum", files["h42"], "--k", 1, "--json"])
    assert json.loads(out)["eigenvalue"] == pytest.approx(3.64575131106)
    code, out, _ = run(["spectrum", files["h42"], "--json"])
    data = json.loads(out)
    assert set(data) == {"eigenvalues", "iterations", "residual"}


def test_factor_check_k3(files):
    code, out, _ = run(["factor", "check", files["k3"], "--c", files["all1"]])
    assert code == 0
    assert out.splitlines() == ["verdict: not-exists", "violation: S=[] T=[] deficiency=-1"]
    for method in ("oracle", "matching", "both"):
        code, out, _ = run(["factor", "check", files["k3"], "--c", files["all1"], "--method", method, "--json"])
        assert json.loads(out) == {"verdict": "not-exists", "violation": {"S": [], "T": [], "deficiency": -1}}


def test_factor_find_k6(files):
    code, out, _ = run(["factor", "find", files["k6"], "--c", files["one3"], "--json"])
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "exists"
    degrees = [0] * 6
    for u, v in data["factor"]:
        degrees[u] += 1
        degrees[v] += 1
    assert all(d in (1, 3) for d in degrees)


def test_thm_check(files):
    code, out, _ = run(["thm", "check", files["k6"], "--c", files["one3"], "--theta", "1/2", "--json"])
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "guaranteed" and data["theta_exact"] == "1/2"
    code, out, _ = run(["thm", "check", files["k6"], "--c", files["one3"]])
    assert out.splitlines()[-1] == "verdict: guaranteed"


def test_domain_errors_exit_1(files, tmp_path):
    code, _, err = run(["thm", "check", files["k3"], "--c", files["all1"]])
    assert code == 1 and "odd" in err
    code, _, err = run(["spectrum", tmp_path / "missing.graph"])
    assert code == 1 and err.startswith("error:")
    code, _, err = run(["tight", "--r", 3, "--h", 4, "--l", 5])
    assert code == 1
    bad = tmp_path / "bad.graph"
    bad.write_text("p 2 1\ne 0 7\n")
    code, _, err = run(["spectrum", bad])
    assert code == 1 and "line 2" in err


def test_gen_round_trip_and_sidecar(tmp_path):
    code, out, _ = run(["gen", "H", "--r", 5, "--eta", 1])
    assert parse_graph(out) == extremal_H(5, 1)
    sidecar = tmp_path / "f.json"
    code, out, _ = run(["gen", "F", "--r", 4, "--h", 2, "--l", 4, "--sidecar", sidecar])
    assert parse_graph(out).n == 22
    assert json.loads(sidecar.read_text())["U"] == [0, 1]
    code, out, _ = run(["gen", "F", "--r", 4, "--h", 2, "--l", 4, "--json"])
    assert set(json.loads(out)) == {"graph", "sidecar"}


def test_gen_rand_is_seeded():
    a = run(["gen", "rand", "--n", 9, "--p", 0.4, "--seed", 7])[1]
    b = run(["gen", "rand", "--n", 9, "--p", 0.4, "--seed", 7])[1]
    assert a == b


def test_output_is_byte_identical_across_processes(files):
    argv = [sys.executable, "-m", "parityfactor", "thm", "check", str(files["k6"]), "--c", str(files["one3"]), "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first

import json
import math
import subprocess
import sys

import pytest

from anglespread.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_spread(capsys):
    doc = run_json(capsys, "spread", "--p", "0,0.3333333333,0.6666666667")
    assert doc["cosine"] == pytest.approx(0.2, abs=1e-9)
    assert set(doc["extension"]) >= {"a", "b", "lambda_minus", "lambda_plus", "idx_min", "idx_max"}


def test_bound(capsys):
    doc = run_json(capsys, "bound", "--n", "4")
    assert doc["cosine"] == pytest.approx(1 / 3, abs=1e-15)
    assert doc["angle_radians"] == pytest.approx(math.acos(1 / 3), abs=1e-15)
    assert doc["angle_radians"] == pytest.approx(1.2309, abs=1e-4)


def test_bound_n2_needs_flag(capsys):
    assert run(capsys, "bound", "--n", "2")[0] == 3
    doc = run_json(capsys, "bound", "--n", "2", "--allow-n2")
    assert doc["cosine"] == 0


def test_uniform_is_domain_error(capsys):
    code, out, err = run(capsys, "spread", "--p", "0.25,0.25,0.25,0.25")
    assert code == 3
    assert "UniformInput" in err
    assert out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["spread", "--p", "0.5,0.6"],
        ["extend", "--p", "0.5,-0.5,1"],
        ["optimal", "--n", "2"],
        ["q-curve", "--n", "2", "--points", "5"],
    ],
)
def test_domain_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nosuch"],
        ["bound"],
        ["spread"],
        ["spread", "--p", "a,b"],
        ["spread", "--p", "0.5,0.5", "--input", "x.json"],
        ["q-curve", "--n", "3", "--points", "1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_guard_exit_code(capsys):
    assert run(capsys, "grid-verify", "--n", "40", "--k", "80")[0] == 4


def test_emitted_vectors_revalidate(capsys):
    doc = run_json(capsys, "extend", "--p", "0.2,0.3,0.5")
    assert doc["lambda_minus"] == pytest.approx(-2.0)
    assert doc["lambda_plus"] == pytest.approx(2.5)
    vectors = [doc["a"], doc["b"], doc["p"]]
    doc = run_json(capsys, "targets", "--p", "0.1,0.2,0.3,0.4")
    vectors += [doc["q"], doc["v"]]
    for vec in vectors:
        text = ",".join(str(x) for x in vec)
        again = run_json(capsys, "extend", "--p", text)
        assert again["p"] == vec


def test_input_file(tmp_path, capsys):
    f = tmp_path / "prior.json"
    f.write_text(json.dumps({"p": [0.2, 0.3, 0.5]}))
    doc = run_json(capsys, "spread", "--input", str(f))
    assert doc["cosine"] == pytest.approx(0.175412, abs=1e-6)
    assert run(capsys, "spread", "--input", str(tmp_path / "missing.json"))[0] == 2


def test_optimal(capsys):
    doc = run_json(capsys, "optimal", "--n", "4")
    assert doc["a_star"] == [0.5, 0.25, 0.25, 0]
    assert doc["p_star"] == doc["b_star"] == [0, 0.25, 0.25, 0.5]
    assert doc["cosine"] == pytest.approx(1 / 3, abs=1e-12)


def test_grid_and_random(capsys):
    doc = run_json(capsys, "grid-verify", "--n", "3", "--k", "30")
    assert doc["best_cosine"] == pytest.approx(0.2, abs=1e-12)
    assert sorted(doc["best_point"]) == pytest.approx([0, 1 / 3, 2 / 3])
    doc = run_json(capsys, "random-verify", "--n", "5", "--samples", "1000", "--seed", "3")
    assert doc["best_cosine"] <= 3 / 7 + 1e-9
    assert doc["samples"] == 1000 and doc["seed"] == 3


def test_targets(capsys):
    doc = run_json(capsys, "targets", "--p", "0,0.3333333333333333,0.6666666666666667", "--tol", "1e-9")
    half = math.acos(0.2) / 2
    assert doc["achieved_angle_pq"] == pytest.approx(half, abs=1e-9)
    assert doc["achieved_angle_uv"] == pytest.approx(half, abs=1e-9)
    assert doc["q_side"] == "a"


def test_q_curve(capsys):
    code, out, _ = run(capsys, "q-curve", "--n", "3", "--points", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("#")
    rows = [[float(v) for v in line.split("\t")] for line in lines[1:]]
    assert [r[0] for r in rows] == [0.5, 0.75, 1.0]
    assert rows[0][1] == 0 and rows[-1][1] == 0

    code, out, _ = run(capsys, "q-curve", "--n", "3", "--points", "2001")
    qs = [float(line.split("\t")[1]) for line in out.splitlines()[1:]]
    assert len(qs) == 2001
    assert max(qs) <= 0.04 + 1e-12

    code, out, _ = run(capsys, "q-curve", "--n", "5", "--points", "2")
    ys = [float(line.split("\t")[0]) for line in out.splitlines()[1:]]
    assert ys == [0.25, 1.0]


def test_output_is_deterministic(capsys):
    argv = ["random-verify", "--n", "4", "--samples", "500", "--seed", "11"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_seventeen_digits():
    assert dumps(0.1) == "0.10000000000000001"
    assert float(dumps(1 / 3)) == 1 / 3
    assert json.loads(dumps({"x": [0.2, 1, True], "y": float("nan")})) == {"x": [0.2, 1, True], "y": None}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "anglespread", "bound", "--n", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["cosine"] == pytest.approx(0.2)

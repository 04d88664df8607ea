import json
import subprocess
import sys

import pytest

from lrkron.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose_single_occurrence_row(capsys):
    code, out, _ = run(capsys, "decompose", "--lambda", "[3,1]", "--mu", "[3,1]", "--n", "3")
    assert code == 0
    assert any(line.startswith("[4,2,2]  1") for line in out.splitlines())


def test_decompose_octet_labels(capsys):
    code, out, _ = run(capsys, "decompose", "--lambda", "[2,1]", "--mu", "[2,1]", "--n", "3")
    assert code == 0
    assert "[3,2,1]  2  η∈{0,1}" in out.splitlines()


def test_decompose_trivial(capsys):
    _, out, _ = run(capsys, "decompose", "--lambda", "[1]", "--mu", "[0]", "--n", "3",
                    "--no-labels")
    rows = [line for line in out.splitlines() if not line.startswith("#")]
    assert rows == ["[1]  1"]


def test_decompose_echoes_reduction(capsys):
    code, out, _ = run(capsys, "decompose", "--lambda", "[2,1,1]", "--mu", "[1]", "--n", "3")
    assert code == 0
    assert "# lambda: [2,1,1] reduced to [1] in SU(3)" in out
    assert "[2]  1  η∈{0}" in out


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--lambda", "2,1", "--mu", "2,1", "--n", "3",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["reduction"] == {"lambda": [2, 1], "mu": [2, 1]}
    assert {"nu": [3, 2, 1], "multiplicity": 2, "eta_labels": [[0], [1]]} in data["terms"]


def test_decompose_su4_label_tuples(capsys):
    _, out, _ = run(capsys, "decompose", "--lambda", "[2,1]", "--mu", "[2,1]", "--n", "4")
    assert any(line.startswith("[3,2,1]  2  η∈{(") for line in out.splitlines())


@pytest.mark.parametrize("argv, code", [
    (("decompose", "--lambda", "[1,2]", "--mu", "[1]", "--n", "3"), 2),
    (("decompose", "--lambda", "[1,x]", "--mu", "[1]", "--n", "3"), 2),
    (("decompose", "--lambda", "[1,1,1,1]", "--mu", "[1]", "--n", "3"), 3),
    (("decompose", "--lambda", "[1]", "--mu", "[1]", "--n", "1"), 3),
    (("multiplicity", "--lambda", "[1]", "--mu", "[1]", "--nu", "[3]", "--n", "3"), 3),
    (("multiplicity", "--lambda", "[1]", "--mu", "[1]", "--nu", "[2]", "--n", "5",
      "--method", "formula"), 3),
    (("labels", "--lambda", "[2,1]", "--mu", "[2,1]", "--nu", "[6]", "--n", "3"), 3),
    (("labels", "--lambda", "(1,1)", "--mu", "(1,1)", "--nu", "[3,2,1]", "--n", "3"), 0),
])
def test_exit_codes(capsys, argv, code):
    assert main(list(argv)) == code


def test_multiplicity_both(capsys):
    code, out, _ = run(capsys, "multiplicity", "--lambda", "[2,1]", "--mu", "[2,1]",
                       "--nu", "[3,2,1]", "--n", "3", "--strict")
    assert code == 0
    assert out.splitlines() == ["2", "formula=2 oracle=2 agree"]


@pytest.mark.parametrize("method, n, nu, expected", [
    ("formula", "3", "[4,2,2]", "1"), ("oracle", "3", "[4,2,2]", "1"),
    ("formula", "4", "[4,2,2]", "1"), ("oracle", "5", "[4,2,2]", "1"),
])
def test_multiplicity_methods(capsys, method, n, nu, expected):
    code, out, _ = run(capsys, "multiplicity", "--lambda", "[3,1]", "--mu", "[3,1]",
                       "--nu", nu, "--n", n, "--method", method)
    assert (code, out.strip()) == (0, expected)


def test_labels_octet_text(capsys):
    code, out, _ = run(capsys, "labels", "--lambda", "[2,1]", "--mu", "[2,1]",
                       "--nu", "[3,2,1]", "--n", "3")
    assert code == 0
    assert out.count("U(4):") == 2
    assert "η=0" in out and "η=1" in out


def test_labels_json(capsys):
    _, out, _ = run(capsys, "labels", "--lambda", "[2,1]", "--mu", "[2,1]", "--nu", "[3,2,1]",
                    "--n", "3", "--format", "json")
    pats = json.loads(out)["patterns"]
    assert [p["rows"][1] for p in pats] == [[3, 2, 0], [3, 1, 1]]
    assert pats[0]["rows"][3] is None


def test_labels_singlet(capsys):
    _, out, _ = run(capsys, "labels", "--lambda", "[2,1]", "--mu", "[0]", "--nu", "[2,1]",
                    "--n", "4", "--format", "json")
    assert len(json.loads(out)["patterns"]) == 1


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--group", "SU3", "--lambda", "[2]", "--mu", "[1,1]",
                       "--nu", "[2,2]")
    data = json.loads(out)
    assert code == 0
    assert data["tags"]["eta_max:m1-lambda1-mu1"] == "LITTLEWOOD"


def test_validate(capsys, tmp_path):
    path = tmp_path / "report.jsonl"
    code, out, _ = run(capsys, "validate", "--max-boxes", "0", "--output", str(path), "--strict")
    assert code == 0
    assert "SU3: max_boxes=0 cases=1" in out
    assert path.read_text() == ""


def test_validate_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "validate", "--max-boxes", "0",
                       "--output", str(tmp_path / "missing" / "r.jsonl"))
    assert code == 4
    assert "cannot write" in err


def test_validate_respects_env_threads(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("LRKRON_THREADS", "2")
    code, out, _ = run(capsys, "validate", "--group", "SU4", "--max-boxes", "3",
                       "--output", str(tmp_path / "r.jsonl"))
    assert code == 0 and "mismatches=0" in out


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "lrkron", "decompose", "--lambda", "[3,2]", "--mu", "[2,1]",
           "--n", "4", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a

from __future__ import annotations

import json
import subprocess
import sys

from gclose.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if k not in ("timings_ms", "ms")}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


def test_closure_matrix3(capsys):
    code, out, _ = _run(capsys, "closure", "--preset", "matrix", "--n", "3")
    assert code == 0
    rep = json.loads(out)
    assert rep["closure_dim"] == 27
    assert rep["algebra"] == {"preset": "matrix", "n": 3}
    assert rep["characters"] == {"1,1,1": "27", "2,1": "-9", "3": "3"}


def test_closure_spec_file(tmp_path, capsys):
    spec = {
        "rank": 2,
        "unit": ["1", "1"],
        "mul_table": [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]],
        "degree": {"kind": "regular"},
    }
    path = tmp_path / "a.json"
    path.write_text(json.dumps(spec))
    out_path = tmp_path / "r.json"
    code, _, _ = _run(capsys, "closure", "--spec", str(path), "-o", str(out_path), "--dump-actions")
    assert code == 0
    rep = json.loads(out_path.read_text())
    assert rep["closure_dim"] == 2 and rep["algebra"]["rank"] == 2
    assert "actions" in rep and "transpositions" in rep


def test_hermitian(capsys):
    code, out, _ = _run(capsys, "hermitian", "--preset", "trivial", "--n", "3", "--m", "3")
    assert code == 0 and json.loads(out)["computed_dim"] == 10
    code, out, _ = _run(capsys, "hermitian", "--preset", "trivial:3", "--m", "3", "--expect", "11")
    assert code == 2 and json.loads(out)["passed"] is False


def test_catalog_exit_codes(capsys):
    code, out, _ = _run(capsys, "catalog", "--tier", "desk", "--reuse")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = _run(capsys, "catalog", "--tier", "desk", "--reuse", "--expect", "6=85")
    assert code == 2
    rep = json.loads(out)
    assert rep["expected_override"] == {"6": 85}
    assert [r["passed"] for r in rep["rows"] if r["row"] == "6"] == [False]
    code, _, err = _run(capsys, "catalog", "--expect", "6")
    assert code == 1 and "ROW=DIM" in err
    code, _, _ = _run(capsys, "catalog", "--expect", "42=1")
    assert code == 1


def test_catalog_deterministic(capsys):
    _, first, _ = _run(capsys, "catalog", "--tier", "desk", "--threads", "1")
    _, second, _ = _run(capsys, "catalog", "--tier", "desk", "--threads", "3")
    a, b = json.loads(first), json.loads(second)
    assert json.dumps(_strip_timings(a), sort_keys=True) == json.dumps(_strip_timings(b), sort_keys=True)


def test_check_subcommand(capsys):
    code, out, _ = _run(capsys, "check", "quadratic")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and len(rep["reports"]) == 3
    code, out, _ = _run(capsys, "check", "endv", "--n", "2")
    assert code == 0 and json.loads(out)["input"] == {"n": 2}
    code, out, _ = _run(capsys, "check", "product", "--preset", "product:trivial:1+matrix:2")
    assert code == 0 and json.loads(out)["reports"][0]["dims"]["closure"] == 12
    code, _, err = _run(capsys, "check", "product", "--preset", "matrix:2")
    assert code == 1 and "product algebra" in err


def test_input_errors(capsys, tmp_path):
    code, _, err = _run(capsys, "closure", "--preset", "bogus:1")
    assert code == 1 and "unknown preset" in err
    code, _, err = _run(capsys, "closure", "--preset", "matrix")
    assert code == 1 and "--n" in err
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"rank": 1, "unit": [1]}))
    code, _, err = _run(capsys, "closure", "--spec", str(bad))
    assert code == 1 and "mul_table" in err
    code, _, _ = _run(capsys, "closure")
    assert code == 1
    code, _, _ = _run(capsys, "nope")
    assert code == 1
    code, _, _ = _run(capsys, "closure", "--preset", "split:2", "--threads", "0")
    assert code == 1


def test_guard_message(capsys):
    code, _, err = _run(capsys, "closure", "--preset", "matrix:3", "--cap", "100")
    assert code == 1 and "--force" in err


def test_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("GCLOSE_DIM_CAP", "100")
    code, _, err = _run(capsys, "closure", "--preset", "matrix:3")
    assert code == 1 and "--force" in err
    # flags win over the environment
    code, _, _ = _run(capsys, "closure", "--preset", "matrix:2", "--cap", "1000")
    assert code == 0
    monkeypatch.setenv("GCLOSE_THREADS", "x")
    code, _, err = _run(capsys, "closure", "--preset", "split:2")
    assert code == 1 and "GCLOSE_THREADS" in err


def test_presets_listing(capsys):
    code, out, _ = _run(capsys, "presets")
    assert code == 0 and "groupring" in out


def test_closure_byte_identical_modulo_timings(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = _run(capsys, "closure", "--preset", "groupring:1,1", "--dump-actions")
        outs.append(json.dumps(_strip_timings(json.loads(out)), sort_keys=True))
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gclose", "closure", "--preset", "split:2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["closure_dim"] == 2

import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from groverian.cli import dumps, main, parse_state, random_docs

from conftest import S3

REPORT_KEYS = {"input", "amplitudes", "canonical", "invariants", "type", "analytic", "numeric",
               "pmax", "G", "relations", "two_qubit"}


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def test_analyze_ghz(tmp_path):
    path = write(tmp_path, "ghz.json", {"amplitudes": [[2**-0.5, 0]] + [[0, 0]] * 6 + [[2**-0.5, 0]]})
    code, text = run(["analyze", "--input", path])
    rep = json.loads(text)
    assert code == 0 and set(rep) == REPORT_KEYS
    assert rep["type"] == "T2b"
    assert abs(rep["analytic"]["value"] - 0.5) < 1e-12 and abs(rep["numeric"]["value"] - 0.5) < 1e-12
    assert abs(rep["G"] - 0.7071067811865476) < 1e-12
    assert abs(rep["G"] ** 2 + rep["pmax"] - 1) < 1e-12


def test_analyze_w(tmp_path):
    amp = [[0, 0]] * 8
    for i in (1, 2, 4):
        amp[i] = [S3, 0]
    code, text = run(["analyze", "--input", write(tmp_path, "w.json", {"amplitudes": amp})])
    rep = json.loads(text)
    assert code == 0 and rep["type"] == "T3a"
    assert abs(rep["analytic"]["value"] - 4 / 9) < 1e-12
    assert abs(rep["G"] - math.sqrt(5) / 3) < 1e-12


def test_analyze_generic_unavailable(tmp_path):
    lam = [0.4, 0.4, 0.4, 0.4, math.sqrt(0.36)]
    path = write(tmp_path, "g.json", {"acin": {"lambda": lam, "phi": 0.3}})
    code, text = run(["analyze", "--input", path])
    rep = json.loads(text)
    assert code == 0 and rep["type"] == "GENERIC"
    assert rep["analytic"]["available"] is False
    assert rep["analytic"]["note"] == "unavailable: not presented"
    assert rep["analytic"]["value"] is None and rep["numeric"]["value"] > 0
    assert rep["pmax"] == rep["numeric"]["value"]


def test_same_keys_for_every_kind(tmp_path):
    docs = [{"amplitudes": [[1, 0]] + [[0, 0]] * 7},
            {"acin": {"lambda": [0.6, 0, 0, 0, 0.8], "phi": 0}},
            {"wlike": {"a": 0.5, "b": 0.5, "c": 0.5, "q": 0.5}},
            {"two_qubit": [[2**-0.5, 0], [0, 0], [0, 0], [2**-0.5, 0]]}]
    path = write(tmp_path, "mix.jsonl", "\n".join(json.dumps(d) for d in docs))
    code, text = run(["analyze", "--input", path])
    reports = [json.loads(line) for line in text.splitlines()]
    assert code == 0 and len(reports) == 4
    for rep in reports:
        assert set(rep) == REPORT_KEYS
        assert set(rep["analytic"]) == set(reports[0]["analytic"])
    assert abs(reports[2]["pmax"] - 0.5) < 1e-12
    assert abs(reports[3]["two_qubit"]["pmax"] - 0.5) < 1e-12


def test_wlike_report_lists_candidates(tmp_path):
    doc = {"wlike": dict(zip("abcq", np.sqrt([0.4, 0.3, 0.2, 0.1])))}
    code, text = run(["analyze", "--input", write(tmp_path, "w.json", doc)])
    rep = json.loads(text)
    assert rep["relations"]["family"] == "WLIKE"
    assert rep["analytic"]["formula_id"] in ("Q", "CQ", "L")
    assert abs(rep["analytic"]["value"] - rep["numeric"]["value"]) < 1e-6


def test_text_format(tmp_path):
    path = write(tmp_path, "p.json", {"acin": {"lambda": [1, 0, 0, 0, 0]}})
    code, text = run(["analyze", "--input", path, "--format", "text"])
    assert code == 0 and "type" in text and "T1" in text


def test_analyze_idempotent(tmp_path):
    path = write(tmp_path, "r.jsonl", "".join(json.dumps(d) + "\n" for d in random_docs("haar3", 3, 4)))
    assert run(["analyze", "--input", path]) == run(["analyze", "--input", path])


@pytest.mark.parametrize("content,needle", [
    ("{not json", "ParseError"),
    (json.dumps({"amplitudes": [[1, 0]] * 8}), "NotNormalized"),
    (json.dumps({"amplitudes": [[1, 0]] * 3}), "ParseError"),
    (json.dumps({"acin": {"lambda": [0.6, -0.8, 0, 0, 0]}}), "InvalidForm"),
    (json.dumps({"acin": {"lambda": [0.6, 0.8, 0, 0, 0], "phi": 4}}), "InvalidForm"),
    (json.dumps({"wlike": {"a": 1}}), "ParseError"),
    (json.dumps({"amplitudes": [[1, 0]] + [[0, 0]] * 7, "acin": {}}), "ParseError"),
    (json.dumps({"amplitudes": [[0, 0]] * 8}), "ZeroState"),
])
def test_invalid_input_exit_2(tmp_path, capsys, content, needle):
    code, _ = run(["analyze", "--input", write(tmp_path, "bad.json", content)])
    assert code == 2
    assert needle in capsys.readouterr().err


def test_missing_file_exit_2(capsys):
    assert run(["analyze", "--input", "/nonexistent/x.json"])[0] == 2


def test_not_converged_exit_3(tmp_path, monkeypatch):
    import groverian.cli as cli
    from groverian.numeric import OptimizerConfig

    monkeypatch.setattr(cli, "OptimizerConfig", lambda **kw: OptimizerConfig(max_iters=1, **kw))
    path = write(tmp_path, "r.json", random_docs("haar3", 1, 5)[0])
    code, text = run(["analyze", "--input", path, "--restarts", "1"])
    assert code == 3
    assert json.loads(text)["numeric"]["converged"] is False


def test_random_ghz():
    code, text = run(["random", "ghz"])
    doc = json.loads(text)
    assert code == 0
    kind, psi = parse_state(doc)
    assert kind == "amplitudes" and np.isclose(abs(psi[0]), 2**-0.5) and np.isclose(abs(psi[7]), 2**-0.5)


def test_random_deterministic(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for p in (a, b):
        assert run(["random", "haar3", "--n", "100", "--seed", "9", "--out", str(p)])[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 100


def test_random_wlike_parse():
    code, text = run(["random", "wlike-uniform", "--n", "50"])
    for line in text.splitlines():
        kind, p = parse_state(json.loads(line))
        assert kind == "wlike" and abs(np.linalg.norm(p.astuple()) - 1) < 1e-12


def test_random_roundtrips_through_analyze(tmp_path):
    for kind in ("haar3", "haar2", "acin-uniform", "wlike-uniform", "w", "bell"):
        path = tmp_path / f"{kind}.jsonl"
        assert run(["random", kind, "--n", "3", "--out", str(path)])[0] == 0
        code, text = run(["analyze", "--input", str(path)])
        assert code == 0 and len(text.splitlines()) == (3 if kind not in ("w", "bell") else 3)


def test_seventeen_digits_roundtrip():
    x = 0.1 + 0.2
    assert dumps(x) == "0.30000000000000004" and float(dumps(x)) == x
    assert dumps({"a": [1, None, True, float("nan")]}) == '{"a": [1, null, true, null]}'
    for d in random_docs("haar3", 5, 0):
        kind, psi = parse_state(json.loads(dumps(d)))
        assert dumps({kind: [[z.real, z.imag] for z in psi]}) == dumps(d)


def test_verify_suite_pass_and_fail():
    code, text = run(["verify", "--suite", "bloch-identities", "--n", "20"])
    rep = json.loads(text)
    assert code == 0 and rep["passed"] and rep["n"] == 20
    code, text = run(["verify", "--suite", "bloch-identities", "--n", "5", "--tol", "1e-30"])
    assert code == 1 and not json.loads(text)["passed"]


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        run(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "groverian", "random", "ghz"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["amplitudes"][0][0] == pytest.approx(2**-0.5)

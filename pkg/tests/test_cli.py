import io
import json
from pathlib import Path

import pytest

from kfano import cli, datasets

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("case", ["thm-3.1", "thm-3.5", "thm-1.2", "mm4-3", "mm2-10"])
def test_reproduce_matches_golden(case):
    code, out, _ = run("reproduce", case, "--format", "json")
    assert code == 0
    assert out == (GOLDEN / f"{case}.json").read_text()


def test_reproduce_text():
    code, out, _ = run("reproduce", "thm-1.2")
    assert code == 0 and "C[t]/(t^2)" in out and out.rstrip().endswith("result: PASS")


def test_reproduce_failed_check(monkeypatch):
    from kfano import pipelines

    def broken():
        doc = pipelines.reproduce_mm4_3()
        doc.check("forced failure", 1, 2)
        return doc

    monkeypatch.setitem(pipelines.PIPELINES, "mm4-3", broken)
    code, out, _ = run("reproduce", "mm4-3")
    assert code == 1 and "[FAIL] forced failure" in out


def test_budget_exit(monkeypatch):
    monkeypatch.setenv("KFANO_BUDGET", "5")
    code, _, err = run("reproduce", "thm-3.5")
    assert code == 3 and "budget" in err


def test_bad_budget_value(monkeypatch):
    monkeypatch.setenv("KFANO_BUDGET", "lots")
    code, _, err = run("reproduce", "thm-3.5")
    assert code == 2


def test_unknown_case_and_command():
    assert run("reproduce", "thm-9")[0] == 2
    assert run("frobnicate")[0] == 2


def test_polytope_info_builtins():
    code, out, _ = run("polytope-info", "deg12-prism", "--format", "json")
    data = json.loads(out)["invariants"]
    assert code == 0 and data["degree"] == 12 and data["k_polystable"] and data["betti"]["euler"] == 8
    data = json.loads(run("polytope-info", "mm4-3", "--format", "json")[1])["invariants"]
    assert data["degree"] == 28
    assert [c["key"] for c in data["singular_locus"]["components"]] == ["ODP"] * 4


def test_polytope_info_file(tmp_path):
    cube = {"lattice_rank": 3, "vertices": [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]]}
    path = tmp_path / "p1cubed.json"
    path.write_text(json.dumps(cube))
    code, out, _ = run("polytope-info", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["invariants"]["degree"] == 48


def test_polytope_info_errors(tmp_path):
    assert run("polytope-info", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("polytope-info", str(bad))[0] == 2
    notfano = tmp_path / "nf.json"
    notfano.write_text(json.dumps({"vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]}))
    assert run("polytope-info", str(notfano))[0] == 2


def _write_builtins(directory):
    for name in datasets.builtin_names():
        (directory / f"{name}.json").write_text(json.dumps(datasets.builtin_polytope(name).to_dict()))


def test_scan(tmp_path):
    _write_builtins(tmp_path)
    code, out, err = run("scan", str(tmp_path), "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 4 and all(r["status"] == "ok" for r in rows)
    assert err == ""


def test_scan_empty(tmp_path):
    code, out, _ = run("scan", str(tmp_path), "--format", "json")
    assert code == 0 and json.loads(out) == []


def test_scan_malformed(tmp_path):
    (tmp_path / "broken.json").write_text("not json")
    code, out, err = run("scan", str(tmp_path), "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 1 and rows[0]["status"] == "error"
    assert "1 file(s)" in err


def test_scan_missing_dir(tmp_path):
    assert run("scan", str(tmp_path / "nowhere"))[0] == 2

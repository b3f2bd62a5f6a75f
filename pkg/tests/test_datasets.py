import json

import pytest

from kfano import datasets
from kfano.polytope import Polytope


def test_checksums():
    assert datasets.verify_checksums() == sorted(datasets.DATA_FILES)


def test_checksum_mismatch(monkeypatch):
    monkeypatch.setattr(datasets, "sha256", lambda name: "0" * 64)
    with pytest.raises(datasets.ChecksumError):
        datasets.verify_checksums()


def test_builtins():
    assert datasets.builtin_names() == ["deg12-prism", "fat-point", "mm2-10", "mm4-3"]
    for name in datasets.builtin_names():
        P = datasets.builtin_polytope(name)
        assert isinstance(P, Polytope) and P.is_fano() and P.ambient_dim == 3
    with pytest.raises(KeyError):
        datasets.builtin_polytope("nope")


def test_prism_annotation():
    entry = datasets.load("polytopes.json")["polytopes"]["deg12-prism"]
    assert any("(0,0,-1)" in n.replace(" ", "") for n in entry["notes"])


def test_catalog_consistency():
    from kfano.deformation import reduced_euler, singularity_catalog
    cat = singularity_catalog()
    seen = 0
    for key, entry in cat.items():
        for comp in entry.get("components", []):
            m = comp.get("milnor")
            if m:
                seen += 1
                assert reduced_euler(m) in (-1, 0, 1)
                assert reduced_euler(m) == m["b2"] - m["b3"]
    assert seen >= 3
    assert [reduced_euler(c["milnor"]) for c in cat["dP6_cone"]["components"]] == [-1, 1]
    rows = datasets.fano_rows()
    assert {r["family"] for r in rows} >= {"MM2-6", "V12", "MM3-1", "MM4-3", "MM2-10", "P1xS2"}
    assert all(r["very_ample"] is False for r in rows if r["family"] == "P1xS2")


def test_expected_cases():
    for case in ("thm-3.1", "thm-3.5", "thm-1.2", "mm4-3", "mm2-10", "products"):
        assert datasets.expected(case)
    assert json.dumps(datasets.group_action("thm-3.5"))

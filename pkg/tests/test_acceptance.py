"""Acceptance criteria; each prints one PASS/FAIL line.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kfano import datasets, deformation, pipelines  # noqa: E402
from kfano.fan import singular_locus_report  # noqa: E402
from kfano.toric_fano import product_degree  # noqa: E402


def _reproduce(case, limit, required):
    t = time.perf_counter()
    doc = pipelines.reproduce(case)
    elapsed = time.perf_counter() - t
    names = {c.name: c.passed for c in doc.checks}
    missing = [r for r in required if r not in names]
    failed = [c.name for c in doc.failures()]
    ok = doc.passed and not missing and elapsed <= limit
    detail = f"{len(doc.checks)} checks, {elapsed:.1f}s (limit {limit}s)"
    if missing:
        detail += f", missing {missing}"
    if failed:
        detail += f", failed {failed}"
    return ok, detail


def criterion_1():
    return _reproduce("thm-3.1", 120, [
        "anticanonical degree", "K-polystable", "Betti numbers (b2, b3, b4)", "Euler characteristic",
        "singular locus types", "curves in the singular cycle", "dim H0(U, T1)", "dim H1(U, T1)",
        "H0 degrees are x_i, 2x_i, x_i + x_(i+1)", "base variables", "base relations",
        "base component dimensions", "smoothing families by component dimension", "chi_U"])


def criterion_2():
    return _reproduce("thm-3.5", 600, [
        "order of Aut(P)", "torus invariants y0..y8", "kernel onto the torus invariants (29 generators)",
        "C2 invariants z1..z9", "kernel onto the C2 invariants (17 generators)", "ideal lies in each prime",
        "intersection of the primes equals the ideal", "prime dimensions", "stack branches",
        "space components", "space component dimensions", "space reduced"])


def criterion_3():
    return _reproduce("thm-1.2", 30, [
        "anticanonical degree", "K-polystable", "singular components", "singular locus types",
        "T1 degrees", "T2 degrees", "base relations", "fixed subring presentation", "space dimension",
        "space reduced"])


def criterion_4():
    return _reproduce("mm4-3", 30, [
        "anticanonical degree", "centrally symmetric", "facet classes", "singular locus types", "b2",
        "smoothing family", "weight polytope contains the origin in its relative interior"])


def criterion_5():
    return _reproduce("mm2-10", 120, [
        "scaffolding covers P", "ambient rays", "weight matrix", "ambient smooth", "ambient Picard rank",
        "h1, h2", "binomials", "-K_Y = L1 + 5 L2", "degree by mixed volumes",
        "degree equals the anticanonical degree of P"])


def criterion_6():
    import test_properties

    counts = {}
    for name, fn in test_properties.SUITES.items():
        try:
            counts[name] = fn()
        except AssertionError as exc:
            return False, f"{name} failed: {exc}"
    low = {k: v for k, v in counts.items() if v < test_properties.N}
    detail = ", ".join(f"{k}: {v}" for k, v in counts.items())
    return not low, detail


def criterion_7():
    p4 = product_degree(4, 12, 3)
    prod = datasets.expected("products")["deg12_times_fat_point"]
    p6 = product_degree(6, Fraction(44, 3), 3, prod["deg_Y"])
    fat = datasets.builtin_polytope("fat-point")
    base = deformation.qg_assemble(fat, singular_locus_report(fat)).base
    same = deformation.product_base(base).to_dict() == base.to_dict()
    ok = p4 == 96 and p6 == 3520 and same
    return ok, f"n=4: {p4}, n=6: {p6}, product base unchanged: {same}"


CRITERIA = [
    ("1 reproduce thm-3.1", criterion_1),
    ("2 reproduce thm-3.5", criterion_2),
    ("3 reproduce thm-1.2", criterion_3),
    ("4 reproduce mm4-3", criterion_4),
    ("5 reproduce mm2-10", criterion_5),
    ("6 property suites", criterion_6),
    ("7 product bookkeeping", criterion_7),
]


def _line(label, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {label}: {detail}"


@pytest.mark.parametrize("label,fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(label, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for label, fn in CRITERIA:
        ok, detail = fn()
        print(_line(label, ok, detail), flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)

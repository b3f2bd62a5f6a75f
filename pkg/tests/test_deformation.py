from itertools import product

import pytest

from kfano import datasets, deformation as D, grobner, linalg
from kfano.fan import SingularLocusReport, face_fan, singular_locus_report
from kfano.polytope import Polytope
from kfano.toric_fano import betti_3fold
from kfano.pipelines import prism_deformations


@pytest.fixture(scope="module")
def prism_data(prism):
    return prism_deformations(prism)


def test_u1_chart_t1():
    R = grobner.PolynomialRing("x y z t")
    # degrees of x, y, z, t on a chart over a 1x2 rectangle
    degs = [(1, 1, 0), (1, -1, 0), (0, 0, 1), (1, 0, -1)]
    ch = D.hypersurface_t1(R("x*y - z^2*t^2"), degs)
    gens = {tuple(e) for e in ch.monomial_generators}
    assert gens == {(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 2), (0, 0, 2, 1)}
    assert ch.shift == (2, 0, 0)  # the degree of f
    # z*t is a basis monomial, realising the degree of z + t - (degree of f)
    assert "z*t" in ch.basis_text()


def test_simple_hypersurfaces():
    R = grobner.PolynomialRing("x y z")
    ch = D.hypersurface_t1(R("x*y - z^2"), [(0, 1), (2, -1), (1, 0)])
    g = ch.graded_dims()
    assert g.is_finite() and g.total() == 1
    S = grobner.PolynomialRing("x")
    assert D.hypersurface_t1(S("x"), [(1,)]).graded_dims().total() == 0


def _box_count(chart, box):
    """Independent count: standard monomials of (f, df) via a reduced GB."""
    gb = chart.ideal.gb()
    lms = gb.leading_monomials()
    counts = {}
    cap = 2 * box + 2
    for e in product(range(cap + 1), repeat=chart.nvars):
        if any(all(a >= b for a, b in zip(e, m)) for m in lms):
            continue
        deg = chart.t1_degree(e)
        if max(abs(x) for x in deg) <= box:
            counts[deg] = counts.get(deg, 0) + 1
    return counts


def test_t1_box_agreement(prism_data):
    _, cover, _, _ = prism_data
    box = 8
    for chart in cover.charts[:2]:
        counts = _box_count(chart, box)
        g = chart.graded_dims()
        for m in product(range(-box, box + 1), repeat=3):
            assert g.dim_at(m) == counts.get(m, 0), (chart.names, m)


def test_localization(prism_data):
    _, cover, _, _ = prism_data
    loc = cover.overlaps()[0].graded_dims()
    assert loc.explicit == {}
    (pat,) = loc.patterns
    assert pat.two_sided == (0,)
    chart = cover.charts[0]
    smooth = D.hypersurface_t1(grobner.PolynomialRing("x")("x"), [(1,)])
    assert smooth.graded_dims().total() == 0
    assert D.localized_chart_t1(chart, cover.forward[0]).patterns == loc.patterns


def test_cech(prism_data):
    _, cover, cech, _ = prism_data
    assert cech.h0.total() == 18 and cech.h1.total() == 0
    labels = {k: tuple(v) for k, v in datasets.expected("thm-3.1")["moment_labels"].items()}
    hexagon = [labels[f"x{i}"] for i in range(1, 7)]
    want = set()
    for i in range(6):
        a, b = hexagon[i], hexagon[(i + 1) % 6]
        want |= {a, tuple(2 * x for x in a), tuple(x + y for x, y in zip(a, b))}
    assert set(cech.h0_degrees()) == want
    M, c0, c1 = D.cech_complex_at(cover, tuple(2 * x for x in hexagon[0]))
    assert (c0, c1, linalg.rank(M)) == (3, 2, 2)
    assert sorted(map(sorted, M)) == sorted(map(sorted, [[-1, 1, 0], [0, -1, 1]]))
    M, c0, c1 = D.cech_complex_at(cover, (7, -9, 5))
    assert (c0, c1) == (0, 0)


def test_cech_rank_bookkeeping(prism_data):
    _, _, cech, _ = prism_data
    for m, row in cech.per_degree.items():
        ker = row["c0"] - row["rank"]
        coker = row["c1"] - row["rank"]
        assert ker - coker == row["c0"] - row["c1"]


def test_cech_window_too_small(prism_data):
    _, cover, _, _ = prism_data
    with pytest.raises(D.WindowTooSmallError):
        D.cech_h01(cover, window=1)


def test_miniversal_base(prism_data):
    _, _, cech, base = prism_data
    cat = D.singularity_catalog()
    assert base.nvars == 24
    assert base.nvars == cech.h0.total() + 2 * cat["dP6_cone"]["t1_dim"]
    R = base.ring()
    want = grobner.Ideal([R(t) for t in ("t1*t2", "t1*t3", "t4*t5", "t4*t6")], R)
    assert grobner.ideal_equality(grobner.Ideal(base.relation_polys(), R), want)
    assert base.component_dims() == [22, 21, 21, 20]


def test_smooth_and_odp_bases(mm43):
    P3 = Polytope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
    base = D.assemble_miniversal_base(singular_locus_report(P3), None)
    assert base.nvars == 0 and base.relations == []
    base = D.assemble_miniversal_base(singular_locus_report(mm43), None)
    assert base.nvars == 4 and base.is_smooth()


def test_missing_catalog_entry(mm43):
    rep = singular_locus_report(mm43)
    with pytest.raises(D.CatalogError):
        D.assemble_miniversal_base(rep, None, catalog={})


def test_qg_assemble(fat):
    q = D.qg_assemble(fat, singular_locus_report(fat))
    assert sorted(q.t1_degrees) == [(0, 0, -1), (0, 0, 1)]
    assert sorted(q.t2_degrees) == [(-1, -1, 0), (0, 0, -2), (0, 0, 2), (1, 1, 0)]
    assert q.consistent
    assert sorted(q.base.relations) == ["t0^2", "t1^2"]
    assert D.product_base(q.base).to_dict() == q.base.to_dict()


def test_milnor_catalog():
    m2 = D.milnor_lookup("dP6_cone", "M2")
    assert (m2["b2"], m2["b3"]) == (1, 2)
    m1 = D.milnor_lookup("dP6_cone", "M1")
    assert (m1["b2"], m1["b3"]) == (2, 1)
    odp = D.milnor_lookup("ODP", "smoothing")
    assert (odp["b2"], odp["b3"]) == (0, 1)
    assert D.reduced_euler(D.milnor_lookup("dP6_cone", "M2")) == -1
    assert D.reduced_euler(m1) == 1


def test_identify_smoothings(prism, prism_data):
    rep, _, _, base = prism_data
    betti = betti_3fold(face_fan(prism))
    out = D.identify_smoothings(betti, base, rep, datasets.fano_rows(), 12)
    assert out["chi_U"] == -18
    assert [(a["dim"], a["family"]) for a in out["assignment"]] == \
        [(22, "MM2-6"), (21, "V12"), (21, "V12"), (20, "MM3-1")]
    assert "P1xS2" not in out["candidates"]
    # swapping the two dP6 cones changes nothing
    swapped = SingularLocusReport(list(reversed(rep.components)))
    _, cover, cech, _ = prism_data
    base2 = D.assemble_miniversal_base(swapped, cech)
    out2 = D.identify_smoothings(betti, base2, swapped, datasets.fano_rows(), 12)
    assert out2 == out


def test_identify_mm43(mm43):
    rep = singular_locus_report(mm43)
    base = D.assemble_miniversal_base(rep, None)
    out = D.identify_smoothings(betti_3fold(face_fan(mm43)), base, rep, datasets.fano_rows(), 28)
    assert [a["family"] for a in out["assignment"]] == ["MM4-3"]
    assert out["picard_rank_rule"] == ["MM4-3"]


def test_identify_smooth_input():
    P = Polytope([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
    rep = singular_locus_report(P)
    base = D.assemble_miniversal_base(rep, None)
    out = D.identify_smoothings(betti_3fold(face_fan(P)), base, rep, datasets.fano_rows(), 48)
    assert out["identity"] and out["assignment"][0]["family"] == "identity"


def test_identify_failure(prism, prism_data):
    rep, _, _, base = prism_data
    with pytest.raises(D.IdentificationError):
        D.identify_smoothings(betti_3fold(face_fan(prism)), base, rep, [], 12)

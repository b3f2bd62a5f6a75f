import pytest

from kfano.fan import (
    Cone, NotStronglyConvexError, chart_presentation, dual_cone_hilbert_basis, face_fan,
    normal_fan, singular_locus_report,
)
from kfano.polytope import Polytope
from kfano import grobner, scaffolding

P3 = Polytope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])


def test_face_fan_counts(prism):
    fan = face_fan(prism)
    assert fan.face_counts() == (12, 18, 8)
    assert fan.is_complete()
    assert len(face_fan(P3).maximal_cones()) == 4


def test_normal_fan_of_polar(prism, fat, mm43):
    for P in (prism, fat, mm43):
        assert normal_fan(P.polar()).same_as(face_fan(P))


def test_cone_reports():
    r = Cone([(0, -1, -1), (1, 0, 1), (1, 1, -1)]).report()
    assert r["quotient_type"] == "1/3(1,1,2)" and r["gorenstein_index"] == 3
    r = Cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)]).report()
    assert r["smooth"] and r["gorenstein_index"] == 1
    r = Cone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]).report()
    assert r["gorenstein_index"] == 1 and r["canonical"] and r["terminal"] and not r["simplicial"]


def test_not_strongly_convex():
    with pytest.raises(NotStronglyConvexError):
        Cone([(1, 0), (-1, 0), (0, 1)]).report()


def test_hilbert_bases():
    rect = Cone([(-1, 1, 1), (-1, 1, -1), (-1, 0, 1), (-1, 0, -1)])
    assert len(rect.dual_hilbert_basis()) == 4
    assert sorted(dual_cone_hilbert_basis(Cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))) == \
        [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert len(Cone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]).dual_hilbert_basis()) == 4


def test_chart_presentations():
    rect = chart_presentation(Cone([(-1, 1, 1), (-1, 1, -1), (-1, 0, 1), (-1, 0, -1)]))
    # xy - z^2 t^2 in the coordinates u0..u3
    assert rect.relations() == ["u0^2*u3^2 - u1*u2"]
    assert chart_presentation(Cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)])).relations() == []
    sq = chart_presentation(Cone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]))
    assert len(sq.relations()) == 1 and grobner.PolynomialRing(sq.variables)(sq.relations()[0]).total_degree() == 2


def test_chart_relations_vanish_on_parametrization():
    for rays in ([(-1, 1, 1), (-1, 1, -1), (-1, 0, 1), (-1, 0, -1)],
                 [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)],
                 [(0, -1, -1), (1, 0, 1), (1, 1, -1)]):
        cp = chart_presentation(Cone(rays))
        assert grobner.monomial_parametrization_vanishes(cp.ideal, cp.degrees)


def test_picard_ranks(prism, mm43):
    assert face_fan(prism).picard_rank() == 1
    assert face_fan(P3).picard_rank() == 1
    assert face_fan(mm43).picard_rank() == 4


def test_picard_bound(prism, mm43, mm210):
    for P in (prism, mm43, mm210):
        fan = face_fan(P)
        d1 = fan.face_counts()[0]
        assert fan.picard_rank() <= d1 - 3
        assert (fan.picard_rank() == d1 - 3) == fan.is_simplicial()


def test_nef_on_ambient():
    amb = scaffolding.ambient_from_scaffolding(scaffolding.load_builtin("mm2-10"))
    names = amb.ray_names

    def divisor(name):
        return [1 if n == name else 0 for n in names]

    L1, L2, mixed = divisor("s0"), divisor("x2"), divisor("x")
    assert amb.fan.is_nef(L1) and amb.fan.is_nef(L2)
    assert not amb.fan.is_nef(mixed)


def test_anticanonical_ample(prism, mm43):
    for P in (prism, mm43):
        fan = face_fan(P)
        ones = [1] * len(fan.rays)
        assert fan.is_cartier(ones) and fan.is_ample(ones)


def test_singular_loci(prism, fat, mm43):
    rep = singular_locus_report(prism)
    assert rep.keys() == {"dP6_cone": 2, "transverse_A1": 1}
    cyc = [c for c in rep.components if c.kind == "transverse_A1_curve_cycle"]
    assert cyc[0].source["curves"] == 6
    assert singular_locus_report(mm43).keys() == {"ODP": 4}
    rep = singular_locus_report(fat)
    assert len(rep.components) == 8
    assert rep.keys() == {"F1_cone": 2, "1/3(1,1,2)": 4, "transverse_A1": 2}
    assert singular_locus_report(P3).components == []

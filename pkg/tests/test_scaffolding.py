import pytest

from kfano import datasets, grobner, linalg
from kfano import scaffolding as S
from kfano.toric_fano import anticanonical_degree


@pytest.fixture(scope="module")
def sc():
    return S.load_builtin("mm2-10")


@pytest.fixture(scope="module")
def amb(sc):
    return S.ambient_from_scaffolding(sc)


def _strut(sc, name):
    return next(s for s in sc.struts if s.name == name)


def test_strut_polytopes(sc):
    assert sorted(S.strut_polytope(sc, _strut(sc, "s0")).vertices) == \
        [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
    assert sorted(S.strut_polytope(sc, _strut(sc, "x")).vertices) == \
        [(-1, -1, 0), (-1, 1, 0), (1, -1, 0), (1, 1, 0)]
    zero = S.Strut("z", (0, 0, 0, 0), (0,))
    assert S.strut_polytope(sc, zero).vertices == [(0, 0, 0)]


def test_verify_scaffolding(sc, mm210):
    assert S.verify_scaffolding(sc, mm210)
    partial = S.Scaffolding(sc.shape_rays, [s for s in sc.struts if s.name != "x"], sc.divisor_names)
    assert not S.verify_scaffolding(partial, mm210)


def test_single_strut_is_its_polytope():
    one = S.Scaffolding([(1, 0), (0, 1), (-1, -1)], [S.Strut("s", (1, 1, 1), ())], ["x1", "x2", "x3"])
    P = S.strut_polytope(one, one.struts[0])
    assert S.verify_scaffolding(one, P)
    # the toric surface of P sits in P^3 as the cubic x1*x2*x3 = s^3
    eqs = S.embedding_equations(one)
    R = eqs.ring
    assert grobner.ideal_equality(grobner.Ideal(eqs.binomials, R),
                                  grobner.Ideal([R("x1*x2*x3 - s^3")], R))


def test_ambient(amb):
    exp = datasets.expected("mm2-10")
    assert {n: list(r) for n, r in zip(amb.ray_names, amb.rays)} == exp["rays"]
    assert amb.weights == exp["weights"]
    assert amb.smooth and amb.picard_rank == 2
    assert len(amb.inequalities) == 7
    for row in amb.weights:
        assert not any(linalg.matvec(amb.ray_map, row))
    K = linalg.integer_kernel(amb.ray_map)
    assert linalg.rank(K + amb.weights) == 2 and set(linalg.elementary_divisors(amb.weights)) == {1}


def test_embedding_equations(sc, amb):
    exp = datasets.expected("mm2-10")
    eqs = S.embedding_equations(sc, amb)
    assert [list(h) for h in eqs.perp] == exp["perp"]
    assert sorted(map(str, eqs.binomials)) == sorted(str(eqs.ring(t)) for t in exp["binomials"])
    assert S.binomials_vanish_on_torus(amb, eqs)


def test_theta_respects_fans(sc, amb, mm210):
    assert S.theta_respects_fans(sc, mm210, amb)


def test_adjunction(sc, amb, mm210):
    exp = datasets.expected("mm2-10")
    adj = S.adjunction_degree_check(amb, S.embedding_equations(sc, amb))
    assert list(adj.minus_K_Y) == exp["minus_K_Y"] == [1, 5]
    assert list(adj.minus_K_X) == exp["minus_K_X"] == [1, 1]
    assert adj.degree == 16 == anticanonical_degree(mm210)


def test_mixed_intersection_rejects_non_nef(amb):
    bad = [1 if n == "x" else 0 for n in amb.ray_names]
    with pytest.raises(Exception):
        S.mixed_intersection(amb.fan, [bad] * 5)


def test_scaffolding_roundtrip(sc):
    assert S.Scaffolding.from_dict(sc.to_dict()) == sc

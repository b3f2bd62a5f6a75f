import pytest

from kfano import datasets, grobner, invariants as I
from kfano.fan import singular_locus_report
from kfano.pipelines import prism_deformations
from kfano.toric_fano import AutStructure, aut_structure


def _poly_set(ring, texts):
    return {str(ring(t)) for t in texts}


def test_torus_monomials():
    out = I.invariant_monomial_generators([(1,), (1,), (1,), (-1,), (-1,), (-1,)])
    assert out.certified and len(out.monomials) == 9
    assert all(sum(e[:3]) == 1 and sum(e[3:]) == 1 for e in out.monomials)
    assert I.invariant_monomial_generators([(0,), (0,)]).monomials == [(1, 0), (0, 1)]
    assert I.invariant_monomial_generators([(1,), (-1,)]).monomials == [(1, 1)]


def test_torus_monomials_pairwise_nondividing():
    out = I.invariant_monomial_generators([(2, 0), (-1, 1), (0, -1), (-1, 0), (1, 1)])
    act = I.TorusAction([(2, 0), (-1, 1), (0, -1), (-1, 0), (1, 1)])
    for a in out.monomials:
        assert act.is_invariant_monomial(a)
        for b in out.monomials:
            if a != b:
                assert not all(x <= y for x, y in zip(a, b))


def test_torus_dimension():
    assert I.torus_invariant_dimension([(1, 0)] * 9 + [(0, 1)] * 9) == 16
    assert I.torus_invariant_dimension([(0,)] * 4) == 4
    assert I.torus_invariant_dimension([(1,)] * 3 + [(-1,)] * 3) == 5


def test_finite_invariants():
    R = grobner.PolynomialRing("x y")
    assert I.finite_invariant_generators(R, [(1, 0)]).texts() == ["x + y", "x*y"]
    assert I.finite_invariant_generators(R, []).texts() == ["x", "y"]


def test_c2_invariants_of_y_ring():
    exp = datasets.expected("thm-3.5")
    Ry = grobner.PolynomialRing([f"y{i}" for i in range(9)])
    swap = [(0, 3, 6, 1, 4, 7, 2, 5, 8)]
    free = I.finite_invariant_generators(Ry, swap)
    # the full invariant ring of the polynomial ring needs more generators
    assert len(free.generators) == 12
    rel = [Ry(t) for t in exp["y_kernel"]]
    mod = I.finite_invariant_generators(Ry, swap, relations=rel)
    assert {str(g) for g in mod.generators} == _poly_set(Ry, exp["z_generators"])
    g = I.FiniteAction(swap)
    assert all(g.is_invariant(f) for f in mod.generators)


def test_artinian_fixed_subrings():
    A = grobner.PolynomialRing("t0 t1")
    rel = [A("t0^2"), A("t1^2")]
    r = I.artinian_fixed_subring(A, rel, [(0, 0, 1), (0, 0, -1)], I.FiniteAction([(1, 0)]))
    assert r.text() == "C[t]/(t^2)" and r.dim == 2 and not r.reduced
    r = I.artinian_fixed_subring(A, rel, [(0,), (0,)])
    assert r.dim == 4 and len(r.basis) == 4
    S = grobner.PolynomialRing("s")
    assert I.artinian_fixed_subring(S, [S("s^2")], [(1,)]).text() == "C"


def test_artinian_rejects_infinite():
    A = grobner.PolynomialRing("t0 t1")
    with pytest.raises(ValueError):
        I.artinian_fixed_subring(A, [A("t0^2")], [(0,), (0,)])


def test_verify_decomposition():
    R = grobner.PolynomialRing("x y")
    ok = I.verify_decomposition(grobner.Ideal([R("x*y")], R),
                                [grobner.Ideal([R("x")], R), grobner.Ideal([R("y")], R)])
    assert ok.ok
    bad = I.verify_decomposition(grobner.Ideal([R("x^2")], R), [grobner.Ideal([R("x")], R)])
    assert not bad.intersection_equal and not bad.ok and bad.witness


@pytest.fixture(scope="module")
def prism_km(prism):
    exp = datasets.expected("thm-3.5")
    _, _, _, base = prism_deformations(prism)
    return base, I.kmoduli_local_report(base, aut_structure(prism), {0: exp["primes"]})


def test_kmoduli_prism(prism_km):
    base, km = prism_km
    assert km.stack_branches == 4 and km.stack_reduced
    assert km.space_components == 3 and km.component_dims == [19, 18, 17] and km.space_reduced
    R, S = km.blocks
    assert R.variables == ["t1", "t2", "t3", "t4", "t5", "t6"]
    assert S.component_dims == [16]
    assert sorted(16 + d for d in R.component_dims) == sorted(km.component_dims)
    assert km.space_components <= km.stack_branches


def test_kmoduli_kernels(prism_km):
    exp = datasets.expected("thm-3.5")
    _, km = prism_km
    d = km.blocks[0].details
    Ry = grobner.PolynomialRing([f"y{i}" for i in range(9)])
    assert grobner.ideal_equality(grobner.Ideal([Ry(t) for t in d["torus_kernel"]], Ry),
                                  grobner.Ideal([Ry(t) for t in exp["y_kernel"]], Ry))
    assert len(exp["y_kernel"]) == 29 and len(exp["z_kernel"]) == 17


def test_kmoduli_fat_point(fat):
    from kfano.deformation import qg_assemble
    q = qg_assemble(fat, singular_locus_report(fat))
    km = I.kmoduli_local_report(q.base, aut_structure(fat))
    assert km.fat_point == "C[t]/(t^2)"
    assert not km.space_reduced and km.component_dims == [0]


def test_kmoduli_unobstructed_trivial_group(mm43):
    from kfano.deformation import assemble_miniversal_base
    base = assemble_miniversal_base(singular_locus_report(mm43), None)
    aut = AutStructure(3, [], 1, [], True)
    km = I.kmoduli_local_report(base, aut)
    assert km.stack_branches == 1 and km.stack_reduced and km.space_reduced


def test_variable_permutations_preserve_relations(prism_km, prism):
    base, _ = prism_km
    perms = I.variable_permutations(base, aut_structure(prism).finite_generators)
    R = base.ring()
    J = grobner.Ideal(base.relation_polys(), R)
    for p in perms:
        for f in base.relation_polys():
            assert J.contains(I.FiniteAction.act(p, f))

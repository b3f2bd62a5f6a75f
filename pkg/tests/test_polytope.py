from fractions import Fraction

import pytest

from kfano.polytope import DegeneratePolytopeError, Polytope, classify_polygon

CUBE = Polytope([(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])
CROSS = Polytope([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
SIMPLEX = Polytope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
UNIT_SIMPLEX = Polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_hull_drops_interior_points():
    sq = Polytope([(0, 0), (1, 0), (0, 1), (1, 1), (Fraction(1, 2), Fraction(1, 2))])
    assert len(sq.vertices) == 4


def test_hull_of_moment_polytope(prism):
    Q = prism.polar()
    assert len(Q.vertices) == 8
    assert len(Q.lattice_points()) == 9


def test_twelve_vertices(mm210):
    assert len(mm210.vertices) == 12


def test_facet_counts(mm210, mm43):
    assert len(mm210.facet_vertex_sets) == 10
    assert len(mm43.facet_vertex_sets) == 12
    assert len(CUBE.facet_vertex_sets) == 6


def test_polar_examples(prism):
    assert CUBE.polar() == CROSS
    assert prism.polar().polar() == prism
    assert sorted(SIMPLEX.polar().vertices) == [(-1, -1, -1), (-1, -1, 3), (-1, 3, -1), (3, -1, -1)]


def test_polar_needs_interior_origin():
    with pytest.raises(Exception):
        UNIT_SIMPLEX.polar()


def test_reflexivity(prism, fat):
    assert prism.is_reflexive()
    assert not fat.is_reflexive()
    assert CUBE.is_reflexive()


def test_lattice_points():
    assert len(UNIT_SIMPLEX.lattice_points()) == 4
    hexagon = Polytope([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)])
    assert len(hexagon.lattice_points()) == 7


def test_volumes(prism, fat):
    assert prism.polar().normalized_volume() == 12
    assert UNIT_SIMPLEX.normalized_volume() == 1
    assert fat.polar().normalized_volume() == Fraction(44, 3)


def test_barycenters(prism):
    assert prism.polar().barycenter() == (0, 0, 0) or not any(prism.polar().barycenter())
    assert list(Polytope([(0,), (1,)]).barycenter()) == [Fraction(1, 2)]
    assert list(Polytope([(0, 0), (1, 0), (0, 2)]).barycenter()) == [Fraction(1, 3), Fraction(2, 3)]


def test_f_vectors(prism, mm210):
    assert tuple(mm210.f_vector()) == (12, 20, 10)
    assert all(len(F) == 4 for F in mm210.facet_vertex_sets)
    assert tuple(CUBE.f_vector()) == (8, 12, 6)
    assert tuple(prism.f_vector()) == (12, 18, 8)


def test_central_symmetry(fat, mm43):
    assert fat.is_centrally_symmetric()
    assert mm43.is_centrally_symmetric()
    assert not UNIT_SIMPLEX.is_centrally_symmetric()


def test_polygon_classes(prism, fat):
    tags = sorted(classify_polygon(prism.face_polytope(F)).tag for F in prism.facet_vertex_sets)
    assert tags == ["dP6_hexagon"] * 2 + ["rect_1x2"] * 6
    target = {(1, 0, 1), (1, 1, 1), (0, 1, 1), (-1, -1, 1)}
    face = next(F for F in fat.facet_vertex_sets if {fat.vertices[i] for i in F} == target)
    assert classify_polygon(fat.face_polytope(face)).tag == "F1_quadrilateral"


def test_facet_interior_points(prism):
    assert all(n == 0 for n in prism.polar().facet_interior_lattice_points())
    assert CUBE.facet_interior_lattice_points() == [1] * 6
    assert Polytope([(0, 0), (1, 0), (0, 1)]).facet_interior_lattice_points() == [0, 0, 0]


def test_automorphism_orders(prism, fat):
    gens, order = prism.lattice_automorphisms()
    assert order == 24
    assert [[-1, 0, 0], [0, -1, 0], [0, 0, 1]] in _group(prism)
    assert fat.lattice_automorphisms()[1] == 4
    assert SIMPLEX.lattice_automorphisms()[1] == 24


def _group(P):
    from kfano.polytope import automorphism_group
    return automorphism_group(P)


def test_automorphisms_permute_vertices(prism):
    from kfano import linalg
    verts = set(prism.vertices)
    for A in _group(prism):
        assert abs(linalg.determinant(A)) == 1
        assert {tuple(linalg.matvec(A, v)) for v in verts} == verts


def test_degenerate_input():
    with pytest.raises(DegeneratePolytopeError):
        Polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0)]).halfspaces()


def test_volume_is_relative_on_faces():
    # a triangle in a plane of Z^3 is measured in its own lattice
    assert Polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0)]).normalized_volume() == 1


def test_json_roundtrip(tmp_path, mm43):
    import json
    path = tmp_path / "p.json"
    path.write_text(json.dumps(mm43.to_dict()))
    assert Polytope.from_json(path) == mm43

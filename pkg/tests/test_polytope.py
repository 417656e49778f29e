import itertools
from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import points
from oracles import brute_force_facets, brute_force_vertices
from polysum import core_math as cm
from polysum.polytope import (InvalidConstruction, NotCentered, box, construct, convex_hull, cross_polytope, cube,
                              cyclic, enumerate_vertices, is_centered, polar_dual, polygon_halfcircle, segment,
                              simplex, support_set, tetrahedron_pc)


def full(pts, d):
    return cm.affine_rank(pts) == d


@given(points(2, max_size=10))
def test_hull_2d_matches_brute_force(pts):
    assume(full(pts, 2))
    p = convex_hull(pts)
    assert set(p.vertices) == brute_force_vertices(pts)
    assert set(p.facets) == brute_force_facets(pts)


@given(points(3, max_size=8))
def test_hull_3d_matches_brute_force(pts):
    assume(full(pts, 3))
    p = convex_hull(pts)
    assert set(p.vertices) == brute_force_vertices(pts)
    assert set(p.facets) == brute_force_facets(pts)


@given(points(3, max_size=9))
def test_every_input_point_satisfies_every_facet(pts):
    assume(pts and cm.affine_rank(pts) >= 1)
    p = convex_hull(pts)
    for x in pts:
        assert all(cm.dot(a, x) <= b for a, b in p.facets)
    for j in range(p.n_facets):
        assert cm.affine_rank([p.vertices[i] for i in p.facet_vertices(j)]) == p.intrinsic_dim - 1


@given(points(3, max_size=9))
def test_hull_is_idempotent(pts):
    assume(pts)
    p = convex_hull(pts)
    assert convex_hull(list(p.vertices)).same_as(p)


@given(points(3, max_size=8), st.integers(0, 500))
def test_rotation_and_translation_keep_the_combinatorics(pts, seed):
    assume(full(pts, 3))
    p = convex_hull(pts)
    q = p.transformed(cm.random_rational_rotation(3, seed)).translated((1, F(-2, 3), 5))
    assert (q.n_vertices, q.n_facets) == (p.n_vertices, p.n_facets)
    assert sorted(map(len, q.incidence)) == sorted(map(len, p.incidence))


def test_flat_polygon_in_space():
    # a square in the plane x + y + z = 1, plus its centre
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1), (F(1, 2), F(1, 2), 0)]
    p = convex_hull([cm.vec(x) for x in pts])
    assert p.intrinsic_dim == 2 and p.ambient_dim == 3
    assert p.n_vertices == 4 and p.n_facets == 4
    for a, _ in p.facets:
        assert cm.dot(a, (1, 1, 1)) == 0


def test_degenerate_inputs():
    p = convex_hull([cm.vec((2, 3))] * 3)
    assert p.intrinsic_dim == 0 and p.n_vertices == 1
    s = segment((0, 0, 0), (2, 2, 2))
    assert s.intrinsic_dim == 1 and s.n_vertices == 2 and s.n_facets == 2
    with pytest.raises(cm.EmptyInput):
        convex_hull([])


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_standard_vertex_and_facet_counts(d):
    assert (cube(d).n_vertices, cube(d).n_facets) == (2 ** d, 2 * d)
    assert (cross_polytope(d).n_vertices, cross_polytope(d).n_facets) == (2 * d, 2 ** d)
    assert (simplex(d).n_vertices, simplex(d).n_facets) == (d + 1, d + 1)


def test_tetrahedron_dual_is_its_reflection():
    t = tetrahedron_pc()
    d = polar_dual(t)
    assert d.n_vertices == 4 and d.n_facets == 4
    assert set(d.vertices) == {cm.scale(-1, v) for v in t.vertices}


@pytest.mark.parametrize("p", [cube(3), cross_polytope(3), tetrahedron_pc(), simplex(4)], ids=lambda p: p.name)
def test_dual_vertices_by_brute_force_enumeration(p):
    ineqs = [(v, 1) for v in p.vertices]
    assert sorted(polar_dual(p).vertices) == enumerate_vertices(ineqs, p.ambient_dim)


@given(points(3, max_size=8), st.integers(0, 100))
def test_dual_involution(pts, seed):
    assume(full(pts, 3))
    p = convex_hull(pts)
    centroid = cm.scale(F(1, p.n_vertices), cm.vsum(p.vertices))
    p = p.translated(cm.scale(-1, centroid))
    assert is_centered(p)
    dd = polar_dual(polar_dual(p))
    assert dd.same_as(p)


def test_dual_needs_centering():
    with pytest.raises(NotCentered):
        polar_dual(box((0, 0), (1, 1)))
    with pytest.raises(NotCentered):
        polar_dual(segment((-1, 0), (1, 0)))


def test_centering_of_flat_polytopes():
    assert is_centered(segment((-1, 1), (1, -1)))
    assert not is_centered(segment((-1, 2), (1, 0)))


def test_support_sets_of_the_cube():
    c = cube(3)
    assert support_set(c, (0, 0, 0)) == c.whole()
    assert len(support_set(c, (1, 0, 0)).vertex_set) == 4
    assert support_set(c, (1, 1, 0)).dim == 1
    v = support_set(c, (1, 2, 3))
    assert v.dim == 0 and c.vertices[v.sorted_vertices()[0]] == (1, 1, 1)
    with pytest.raises(cm.DimensionMismatch):
        support_set(c, (1, 1))


def test_cyclic_4_6_is_two_neighbourly():
    ts = [1, 2, 3, 4, 5, 6]
    p = cyclic(4, ts)
    assert p.n_vertices == 6
    # (t-a)^2 (t-b)^2 is minimised on the curve exactly at a and b
    for a, b in itertools.combinations(ts, 2):
        c3 = -2 * (a + b)
        c2 = a * a + b * b + 4 * a * b
        c1 = -2 * a * b * (a + b)
        face = support_set(p, (-c1, -c2, -c3, -1))
        assert [p.vertices[i][0] for i in face.sorted_vertices()] == [a, b]


def test_cyclic_rejects_repeated_parameters():
    with pytest.raises(InvalidConstruction):
        cyclic(4, [1, 2, 2, 3, 4])


def test_halfcircle_polygon_placement():
    p = polygon_halfcircle([F(1, 3), F(1, 2), 1, 2], 1, 3)
    assert p.intrinsic_dim == 2 and p.n_vertices == 4
    assert all(v[0] == 0 and v[2] > 0 for v in p.vertices)
    with pytest.raises(InvalidConstruction):
        polygon_halfcircle([1, 2], 2, 3)


def test_construct_dispatch():
    assert construct("cube", dim=2).same_as(cube(2))
    assert construct("tetrahedron").same_as(tetrahedron_pc())
    assert construct("points", points=[(0, 0), (1, 0), (0, 1)]).n_vertices == 3
    with pytest.raises(InvalidConstruction):
        construct("dodecahedron")


def test_flat_hull_with_a_point_on_an_edge():
    # the origin lies on the edge from (0,0,-1) to (0,0,1); facet orientation must ignore it
    p = convex_hull([cm.vec(v) for v in [(0, 0, 0), (0, 0, 1), (0, 0, -1), (0, 1, 0)]])
    assert p.n_vertices == 3
    assert ((0, -1, 0), 0) in p.facets
    assert all(cm.dot(a, (0, 0, 0)) <= b for a, b in p.facets)

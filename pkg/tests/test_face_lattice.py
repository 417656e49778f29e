from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import points
from oracles import cross_fvector, cube_fvector, simplex_fvector
from polysum import core_math as cm
from polysum.face_lattice import (Cone, TrivialFace, boundary_order, build_face_lattice, closure_order_holds,
                                  cone_interior_point, diamond_violations, dual_face, euler_residual, in_relint,
                                  lattice_dot, lattice_text, normal_cone, witness_direction)
from polysum.polytope import convex_hull, cross_polytope, cube, cyclic, polar_dual, simplex, support_set, tetrahedron_pc


def centred_hull(pts):
    p = convex_hull(pts)
    c = cm.scale(F(1, p.n_vertices), cm.vsum(p.vertices))
    return p.translated(cm.scale(-1, c))


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_standard_f_vectors(d):
    assert build_face_lattice(cube(d)).f_vector() == cube_fvector(d)
    assert build_face_lattice(cross_polytope(d)).f_vector() == cross_fvector(d)
    assert build_face_lattice(simplex(d)).f_vector() == simplex_fvector(d)


def test_cyclic_4_6_has_all_fifteen_edges():
    assert build_face_lattice(cyclic(4, range(1, 7))).f_vector()[1] == 15


@given(points(3, max_size=9))
def test_euler_and_diamond_on_random_hulls(pts):
    assume(pts)
    lat = build_face_lattice(convex_hull(pts))
    assert euler_residual(lat) == 0
    assert diamond_violations(lat) == []


@given(points(3, max_size=9))
def test_face_dims_agree_with_affine_rank(pts):
    assume(cm.affine_rank(pts) >= 1)
    p = convex_hull(pts)
    for f in build_face_lattice(p).nonempty():
        assert f.dim == cm.affine_rank(p.points(f))


@given(points(3, max_size=8), st.sets(st.integers(0, 7), min_size=1, max_size=3))
def test_smallest_face_through_vertices(pts, picks):
    assume(cm.affine_rank(pts) == 3)
    p = convex_hull(pts)
    picks = {i % p.n_vertices for i in picks}
    lat = build_face_lattice(p)
    f = p.face_from_vertices(picks)
    assert picks <= f.vertex_set
    assert lat.find(f.vertex_set) == f
    assert all(not picks <= g.vertex_set for g in lat.faces if g < f)


def test_tetrahedron_edge_cone():
    t = tetrahedron_pc()
    edge = build_face_lattice(t).by_dim(1)[0]
    cone = normal_cone(t, edge)
    assert len(cone.generators) == 2 and cone.dim == 2


def test_interior_directions_recover_every_cube_face():
    c = cube(3)
    faces = build_face_lattice(c).nontrivial()
    assert len(faces) == 26
    for f in faces:
        assert support_set(c, cone_interior_point(normal_cone(c, f))) == f


@given(points(3, max_size=8))
def test_witness_directions_on_random_hulls(pts):
    assume(pts)
    p = convex_hull(pts)
    for f in build_face_lattice(p).nonempty():
        assert support_set(p, witness_direction(p, f)) == f


def test_witness_directions_on_a_flat_polygon():
    p = convex_hull([cm.vec(v) for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]])
    for f in build_face_lattice(p).nonempty():
        assert support_set(p, witness_direction(p, f)) == f


def test_trivial_faces_have_no_normal_cone():
    c = cube(2)
    with pytest.raises(TrivialFace):
        normal_cone(c, c.whole())


def test_double_dual_face_on_the_tetrahedron():
    t = tetrahedron_pc()
    td = polar_dual(t)
    faces = build_face_lattice(t).nontrivial()
    assert len(faces) == 14
    for f in faces:
        fd = dual_face(t, f, td)
        assert f.dim + fd.dim == 2
        assert dual_face(td, fd, t) == f


@given(points(3, max_size=8))
def test_dual_face_dimensions(pts):
    assume(cm.affine_rank(pts) == 3)
    p = centred_hull(pts)
    pd = polar_dual(p)
    for f in build_face_lattice(p).nontrivial():
        assert f.dim + dual_face(p, f, pd).dim == 2


def test_closure_order_on_the_square():
    c = cube(2)
    lat = build_face_lattice(c)
    for g in lat.nonempty():
        for f in lat.nonempty():
            assert closure_order_holds(c, lat, g, f)


def test_cone_membership():
    quadrant = Cone(((F(1), F(0)), (F(0), F(1))))
    assert quadrant.contains((2, 3)) and not quadrant.contains((-1, 3))
    assert quadrant.relint_contains((1, 1)) and not quadrant.relint_contains((1, 0))
    plane = Cone(((1, 0), (-1, 0), (0, 1), (0, -1)))
    assert plane.relint_contains((0, 0))


def test_relative_interior_of_faces():
    c = cube(3)
    lat = build_face_lattice(c)
    top = support_set(c, (0, 0, 1))
    assert in_relint(c, top, (0, 0, 1))
    assert not in_relint(c, top, (1, 0, 1))
    assert in_relint(c, c.whole(), (0, 0, 0))
    assert in_relint(c, lat.by_dim(0)[0], c.vertices[0])


def test_boundary_order_is_a_cycle_with_outward_orientation():
    c = cube(3)
    lat = build_face_lattice(c)
    for f in lat.by_dim(2):
        order = boundary_order(c, lat, f)
        assert sorted(order) == sorted(f.vertex_set)
        for a, b in zip(order, order[1:] + order[:1]):
            assert c.face_from_vertices({a, b}).dim == 1
        a, b, x = (c.vertices[i] for i in order[:3])
        u, v = cm.sub(b, a), cm.sub(x, b)
        n = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        outward = c.facets[min(f.facet_set)][0]
        assert cm.dot(n, outward) > 0


def test_exports():
    lat = build_face_lattice(cube(2))
    dot = lattice_dot(lat)
    assert dot.startswith("digraph") and dot.count("->") == len(lat.hasse_covers)
    assert len(lattice_text(lat).splitlines()) == len(lat.faces) + 1


def test_euler_residual_of_bare_vectors():
    assert euler_residual((8, 12, 6)) == 0
    assert euler_residual((16, 32, 24, 8)) == 0
    assert euler_residual((4, 4)) == 0
    assert euler_residual((8, 12, 7)) == 1

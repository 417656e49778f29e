from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polysum import extremal as ex
from polysum.face_lattice import build_face_lattice
from polysum.minkowski import minkowski_sum, trivial_kface_bound
from polysum.polytope import InvalidConstruction, cube, tetrahedron_pc


def test_default_parameters_are_symmetric_about_one():
    assert ex.default_t_list(4) == [F(1, 4), F(2, 3), F(3, 2), F(4, 1)]
    assert ex.default_t_list(3)[1] == 1


def test_quadrilaterals_in_two_planes():
    ts = [F(1, 3), F(1, 2), 1, 2]
    fam = ex.build_halfcircle_family(3, (4, 4), [ts, ts])
    assert fam.vertex_in_own_cone
    a, b = fam.polytopes
    assert all(v[1] == 0 for v in a.vertices) and all(v[0] == 0 for v in b.vertices)
    assert ex.verify_vertex_bound_attained(fam).computed == 16


@pytest.mark.parametrize("d, counts, expected", [(3, (4, 4), 16), (3, (5, 6), 30), (4, (3, 3, 3), 27),
                                                 (3, (1, 1), 1), (4, (2, 5), 10)])
def test_vertex_bound_attained(d, counts, expected):
    b = ex.verify_vertex_bound_attained(ex.build_halfcircle_family(d, counts))
    assert b.bound == expected and b.attained


@settings(max_examples=10)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=2))
def test_vertex_bound_attained_in_three_dimensions(counts):
    fam = ex.build_halfcircle_family(3, counts)
    assert ex.verify_vertex_bound_attained(fam).attained


def test_halfcircle_family_validation():
    with pytest.raises(InvalidConstruction):
        ex.build_halfcircle_family(3, (3, 3, 3))
    with pytest.raises(InvalidConstruction):
        ex.build_halfcircle_family(3, (2,), [[2, 1]])
    with pytest.raises(InvalidConstruction):
        ex.build_halfcircle_family(2, (2,))


def test_residuals_of_single_polytopes_vanish():
    for f in [(4, 6, 4), (8, 12, 6), (6, 12, 8)]:
        assert ex.three_d_residuals(f, [f]) == (0, 0, 0)


@pytest.mark.parametrize("seed", range(4))
def test_two_tetrahedra_in_general_position(seed):
    found = ex.rotate_into_general_position([tetrahedron_pc(), tetrahedron_pc()], seed)
    assert found is not None
    r = ex.check_3d_relations(found[0])
    assert r.general_position and r.ok
    assert r.residuals == (0, 0, 0)


def test_tetrahedron_plus_rotated_cube():
    rotated, _ = ex.rotate_into_general_position([tetrahedron_pc(), cube(3)], 3)
    r = ex.check_3d_relations(rotated)
    assert r.residuals == (0, 0, 0)
    assert r.pure == 10 and r.pure_formula == 10
    assert r.fvector[2] == r.pure + r.mixed


def test_parallel_cubes_are_flagged():
    r = ex.check_3d_relations([cube(3), cube(3)])
    assert not r.general_position
    assert r.ok  # nothing is asserted outside general position


def test_facet_and_edge_bound_values():
    assert ex.facet_edge_bound_values(4, 4) == (18, 32)


@pytest.mark.parametrize("seed", range(5))
def test_facet_and_edge_bounds_hold(seed):
    b = ex.facet_edge_bounds_3d(ex.random_polytope_3d(seed), ex.random_polytope_3d(seed + 100))
    assert b.holds and min(b.slack) >= 0


def test_facet_bound_witness():
    hit = ex.search_facet_bound_witness(4, 4)
    assert hit is not None
    p1, p2, rep = hit
    assert rep.fvector == (16, 32, 18) and rep.attained


def test_cyclic_parameters_interleave():
    assert ex.default_cyclic_t_lists((2, 3)) == [[1, 3], [2, 4, 5]]


def test_cyclic_vertex_bound():
    fam = ex.build_cyclic_family(4, (5, 6))
    b = ex.verify_kface_bound_attained(fam, 0)
    assert (b.computed, b.bound) == (30, 30)


def test_single_cyclic_polytope_is_neighbourly():
    fam = ex.build_cyclic_family(4, (7,))
    assert [ex.verify_kface_bound_attained(fam, k).computed for k in (0, 1)] == [7, 21]
    assert ex.neighbourly_failures(fam[0]) == []


def test_cyclic_six_dimensional_pair():
    fam = ex.build_cyclic_family(6, (4, 4))
    assert list(ex.attainable_range(6, 2)) == [0, 1]
    f = build_face_lattice(minkowski_sum(fam).sum).f_vector()
    assert f[0] == 16 and f[1] == trivial_kface_bound([4, 4], 1) == 48


def test_cyclic_family_validation():
    with pytest.raises(InvalidConstruction):
        ex.build_cyclic_family(4, (3, 3, 3))
    with pytest.raises(InvalidConstruction):
        ex.build_cyclic_family(4, (2, 2), [[1, 2], [2, 3]])

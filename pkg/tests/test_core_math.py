from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from oracles import smat, to_fraction
from polysum import core_math as cm

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r)))
square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n))


def test_q_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        cm.Q(0.5)
    with pytest.raises(TypeError):
        cm.Q(True)
    assert cm.Q("3/6") == F(1, 2)


@given(rationals)
def test_rational_text_round_trip(x):
    assert cm.parse_rational(cm.fmt_rational(x)) == x


def test_vector_ops_check_lengths():
    with pytest.raises(cm.DimensionMismatch):
        cm.add((1, 2), (1, 2, 3))
    with pytest.raises(cm.EmptyInput):
        cm.vsum([])
    assert cm.vsum([], d=2) == (0, 0)


@given(matrices)
def test_rank_matches_sympy(rows):
    assert cm.rank(rows) == smat(rows).rank()


@given(matrices)
def test_rank_nullity(rows):
    ns = cm.nullspace(rows)
    assert cm.rank(rows) + len(ns) == len(rows[0])
    for v in ns:
        assert all(cm.dot(r, v) == 0 for r in rows)


def test_ragged_rows_rejected():
    with pytest.raises(cm.DimensionMismatch):
        cm.rank([[1, 2], [3]])


@given(square)
def test_determinant_matches_sympy(a):
    assert cm.determinant(a) == to_fraction(smat(a).det())


@given(square)
def test_inverse_and_solve(a):
    if cm.determinant(a) == 0:
        return
    inv = cm.inverse(a)
    assert cm.mat_mul(a, inv) == cm.identity(len(a))
    b = [F(i + 1) for i in range(len(a))]
    x = cm.solve(a, b)
    assert cm.apply(a, x) == tuple(b)


def test_projection_onto_line():
    line = cm.AffineSubspace(cm.vec((1, 1)), (cm.vec((1, -1)),))
    assert cm.project_onto_affine((0, 0), line) == (1, 1)


@given(st.lists(st.tuples(rationals, rationals, rationals), min_size=1, max_size=4),
       st.tuples(rationals, rationals, rationals))
def test_projection_residual_is_orthogonal(pts, x):
    aff = cm.affine_hull(pts)
    p = cm.project_onto_affine(x, aff)
    assert aff.contains(p)
    r = cm.sub(x, p)
    assert all(cm.dot(r, b) == 0 for b in aff.direction_basis)


def test_affine_rank_conventions():
    assert cm.affine_rank([]) == -1
    assert cm.affine_rank([(1, 2)]) == 0
    assert cm.affine_rank([(0, 0), (1, 1), (2, 2)]) == 1


@given(st.fractions(min_value=F(1, 20), max_value=50, max_denominator=20))
def test_circle_point_on_upper_half_circle(t):
    x, y = cm.rational_circle_point(t)
    assert x * x + y * y == 1 and y > 0


def test_circle_angle_increases_with_t():
    xs = [cm.rational_circle_point(t)[0] for t in (F(1, 3), F(1, 2), 1, 2, 3)]
    assert xs == sorted(xs, reverse=True)
    with pytest.raises(cm.DomainError):
        cm.rational_circle_point(0)


def test_cayley_two_by_two():
    # worked by hand: (I - A) (I + A)^-1 with A = [[0, 1/2], [-1/2, 0]]
    q = cm.cayley([[0, F(1, 2)], [F(-1, 2), 0]])
    assert q == [[F(3, 5), F(-4, 5)], [F(4, 5), F(3, 5)]]


@given(st.integers(2, 5), st.integers(0, 10_000))
def test_random_rotation_is_special_orthogonal(d, seed):
    q = cm.random_rational_rotation(d, seed)
    assert cm.is_orthogonal(q)
    assert cm.determinant(q) == 1
    assert q == cm.random_rational_rotation(d, seed)


def test_rotation_needs_two_dimensions():
    with pytest.raises(cm.DomainError):
        cm.random_rational_rotation(1, 0)


@given(st.integers(1, 3).flatmap(lambda m: st.tuples(
    st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=m, max_size=m),
    st.lists(st.fractions(min_value=0, max_value=3, max_denominator=4), min_size=4, max_size=4))))
def test_feasible_when_built_from_a_nonnegative_point(case):
    a, z0 = case
    b = [cm.dot(row, z0) for row in a]
    z = cm.feasible_nonnegative(a, b)
    assert z is not None
    assert all(x >= 0 for x in z)
    assert [cm.dot(row, z) for row in a] == b


def test_infeasible_system():
    assert cm.feasible_nonnegative([[-1, -1]], [1]) is None
    assert cm.feasible_nonnegative([[1, 1], [1, 1]], [1, 2]) is None


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5))
def test_primitive_divides_out_gcd(v):
    p = cm.primitive(v)
    if any(v):
        g = 0
        for x in p:
            g = gcd(g, x)
        assert g == 1
        assert cm.rank([v, p]) == 1

"""Constructions attaining the trivial face bounds, and the 3D face relations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import core_math as cm
from .face_lattice import build_face_lattice
from .minkowski import (SumContext, decompose_face, minkowski_sum, relatively_in_general_position,
                        sum_facets, trivial_kface_bound, trivial_vertex_bound)
from .polytope import InvalidConstruction, Polytope, convex_hull, cyclic, polygon_halfcircle, support_set


# -- half-circle families -----------------------------------------------------------

def default_t_list(n: int) -> list[Fraction]:
    """n increasing parameters, symmetric about the top of the circle (t = 1)."""
    return [Fraction(j, n + 1 - j) for j in range(1, n + 1)]


@dataclass(frozen=True)
class HalfCircleFamily:
    d: int
    counts: tuple
    t_lists: tuple
    polytopes: tuple
    vertex_in_own_cone: bool  # v in N({v}; P_i) for every vertex


def build_halfcircle_family(d: int, counts: Sequence[int], t_lists: Sequence[Sequence] | None = None) -> HalfCircleFamily:
    if d < 3:
        raise InvalidConstruction("half-circle families need d >= 3")
    if not 1 <= len(counts) <= d - 1:
        raise InvalidConstruction("between 1 and d-1 polygons")
    if any(n < 1 for n in counts):
        raise InvalidConstruction("every polygon needs a vertex")
    if t_lists is None:
        t_lists = [default_t_list(n) for n in counts]
    t_lists = [[cm.Q(t) for t in ts] for ts in t_lists]
    if len(t_lists) != len(counts):
        raise InvalidConstruction("one parameter list per polygon")
    for n, ts in zip(counts, t_lists):
        if len(ts) != n:
            raise InvalidConstruction("parameter list length differs from the count")
        if any(t <= 0 for t in ts) or any(a >= b for a, b in zip(ts, ts[1:])):
            raise InvalidConstruction("parameters must be positive and strictly increasing")
    polys = tuple(polygon_halfcircle(ts, i, d) for i, ts in enumerate(t_lists))
    ok = all(
        support_set(p, v).vertex_set == frozenset([i])
        for p in polys for i, v in enumerate(p.vertices)
    )
    return HalfCircleFamily(d, tuple(counts), tuple(tuple(ts) for ts in t_lists), polys, ok)


@dataclass(frozen=True)
class BoundReport:
    label: str
    computed: int
    bound: int

    @property
    def attained(self) -> bool:
        return self.computed == self.bound

    @property
    def holds(self) -> bool:
        return self.computed <= self.bound


def verify_vertex_bound_attained(family: HalfCircleFamily) -> BoundReport:
    ctx = minkowski_sum(list(family.polytopes))
    return BoundReport(f"d={family.d} counts={family.counts}", ctx.sum.n_vertices,
                       trivial_vertex_bound(family.counts))


# -- 3D relations -------------------------------------------------------------------

@dataclass
class ThreeDRelationsReport:
    fvector: tuple
    summand_fvectors: tuple
    general_position: bool
    residuals: tuple
    pure: int
    mixed: int
    other: int
    pure_formula: int
    mixed_formula: Fraction

    @property
    def ok(self) -> bool:
        """Residuals and facet accounting, asserted only in general position."""
        if not self.general_position:
            return True
        return (self.residuals == (0, 0, 0) and self.other == 0
                and self.pure == self.pure_formula and self.mixed == self.mixed_formula
                and self.fvector[2] == self.pure + self.mixed)


def three_d_residuals(f: Sequence[int], parts: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    def lhs(g):
        return (2 * g[2] - g[1], g[2] - g[0] + 2, g[1] - 2 * g[0] + 4)

    total = lhs(f)
    sums = [sum(lhs(g)[i] for g in parts) for i in range(3)]
    return tuple(a - b for a, b in zip(total, sums))


def check_3d_relations(summands: Sequence[Polytope], ctx: SumContext | None = None) -> ThreeDRelationsReport:
    for p in summands:
        if p.ambient_dim != 3 or p.intrinsic_dim != 3:
            raise ValueError("every summand must be a 3-polytope in R^3")
    ctx = ctx or minkowski_sum(list(summands))
    f = build_face_lattice(ctx.sum).f_vector()
    parts = tuple(build_face_lattice(p).f_vector() for p in summands)
    gp, _ = relatively_in_general_position(ctx)
    pure = mixed = other = 0
    for facet in sum_facets(ctx):
        dims = sorted(decompose_face(ctx, facet).part_dims, reverse=True)
        rest = dims[2:] if len(dims) > 2 else []
        if dims[0] == 2 and (len(dims) == 1 or dims[1] == 0) and not any(rest):
            pure += 1
        elif len(dims) > 1 and dims[0] == 1 and dims[1] == 1 and not any(rest):
            mixed += 1
        else:
            other += 1
    return ThreeDRelationsReport(
        fvector=f,
        summand_fvectors=parts,
        general_position=gp,
        residuals=three_d_residuals(f, parts),
        pure=pure,
        mixed=mixed,
        other=other,
        pure_formula=sum(g[2] for g in parts),
        mixed_formula=Fraction(f[1] - sum(g[1] for g in parts), 2),
    )


def rotate_into_general_position(summands: Sequence[Polytope], seed: int, max_tries: int = 50):
    """Rotate all but the first summand by seeded rational rotations until the sum
    is relatively in general position. Returns (summands, seed used) or None."""
    d = summands[0].ambient_dim
    for attempt in range(max_tries):
        s = seed * 1009 + attempt
        rotated = [summands[0]] + [
            p.transformed(cm.random_rational_rotation(d, s * 31 + i)) for i, p in enumerate(summands[1:], 1)
        ]
        if relatively_in_general_position(minkowski_sum(rotated))[0]:
            return rotated, s
    return None


def random_polytope_3d(seed: int, n_points: int = 6, radius: int = 3) -> Polytope:
    """Hull of random integer points; retried until it is 3-dimensional."""
    import random

    rng = random.Random(seed)
    while True:
        pts = [tuple(rng.randint(-radius, radius) for _ in range(3)) for _ in range(n_points)]
        p = convex_hull([cm.vec(x) for x in pts], 3, name=f"rand{seed}")
        if p.intrinsic_dim == 3:
            return p


# -- facet and edge bounds for two 3-polytopes -------------------------------------------

@dataclass(frozen=True)
class FacetEdgeBounds:
    f0s: tuple
    fvector: tuple
    facet_bound: int
    edge_bound: int

    @property
    def holds(self) -> bool:
        return self.fvector[2] <= self.facet_bound and self.fvector[1] <= self.edge_bound

    @property
    def attained(self) -> bool:
        return self.fvector[2] == self.facet_bound and self.fvector[1] == self.edge_bound

    @property
    def slack(self) -> tuple[int, int]:
        return (self.facet_bound - self.fvector[2], self.edge_bound - self.fvector[1])


def facet_edge_bound_values(a: int, b: int) -> tuple[int, int]:
    return a * b + a + b - 6, 2 * a * b + a + b - 8


def facet_edge_bounds_3d(p1: Polytope, p2: Polytope) -> FacetEdgeBounds:
    for p in (p1, p2):
        if p.intrinsic_dim != 3 or p.ambient_dim != 3:
            raise ValueError("both summands must be 3-polytopes in R^3")
    f = build_face_lattice(minkowski_sum([p1, p2]).sum).f_vector()
    a, b = p1.n_vertices, p2.n_vertices
    fb, eb = facet_edge_bound_values(a, b)
    return FacetEdgeBounds((a, b), f, fb, eb)


def lifted_halfcircle(ts: Sequence, axis: int, lifts: Sequence) -> Polytope:
    """Half-circle polygon in the (e_axis, e_3) plane with vertex j pushed along
    the remaining axis by ``lifts[j]``; full-dimensional once a lift is nonzero."""
    other = 1 - axis
    pts = []
    for t, h in zip(ts, lifts):
        x, z = cm.rational_circle_point(t)
        v = [Fraction(0)] * 3
        v[axis], v[other], v[2] = x, cm.Q(h), z
        pts.append(tuple(v))
    return convex_hull(pts, 3, name=f"lifted{axis}")


def search_facet_bound_witness(n1: int = 4, n2: int = 4, epsilons: Sequence | None = None):
    """Grid search for two simplicial 3-polytopes meeting both bounds with equality.

    Returns (P1, P2, report) for the first hit or None when the grid is exhausted.
    """
    if epsilons is None:
        epsilons = [Fraction(1, k) for k in (10, 7, 5, 3, 20, 50)]
    ts1, ts2 = default_t_list(n1), default_t_list(n2)
    patterns = []
    for n in (n1, n2):
        pats = []
        for signs in itertools.product((0, 1, -1), repeat=n):
            if sum(1 for s in signs if s) >= 1:
                pats.append(signs)
        patterns.append(pats)
    for eps in epsilons:
        for s1 in patterns[0]:
            p1 = lifted_halfcircle(ts1, 0, [eps * s for s in s1])
            if p1.intrinsic_dim != 3 or p1.n_vertices != n1 or not _simplicial(p1):
                continue
            for s2 in patterns[1]:
                p2 = lifted_halfcircle(ts2, 1, [eps * s * Fraction(2, 3) for s in s2])
                if p2.intrinsic_dim != 3 or p2.n_vertices != n2 or not _simplicial(p2):
                    continue
                rep = facet_edge_bounds_3d(p1, p2)
                if rep.attained:
                    return p1, p2, rep
    return None


def _simplicial(p: Polytope) -> bool:
    return all(len(p.facet_vertices(j)) == p.intrinsic_dim for j in range(p.n_facets))


# -- cyclic polytope families ----------------------------------------------------------

def default_cyclic_t_lists(counts: Sequence[int]) -> list[list[Fraction]]:
    """Distinct integers dealt round-robin, so the polytopes interleave on the curve."""
    lists: list[list[Fraction]] = [[] for _ in counts]
    t = 1
    remaining = list(counts)
    while any(remaining):
        for i, r in enumerate(remaining):
            if r:
                lists[i].append(Fraction(t))
                t += 1
                remaining[i] -= 1
    return lists


def build_cyclic_family(d: int, counts: Sequence[int], t_lists: Sequence[Sequence] | None = None) -> list[Polytope]:
    if d < 4:
        raise InvalidConstruction("cyclic families need d >= 4")
    if not 1 <= len(counts) <= d // 2:
        raise InvalidConstruction("at most floor(d/2) cyclic polytopes")
    if t_lists is None:
        t_lists = default_cyclic_t_lists(counts)
    t_lists = [[cm.Q(t) for t in ts] for ts in t_lists]
    flat = [t for ts in t_lists for t in ts]
    if len(set(flat)) != len(flat):
        raise InvalidConstruction("moment curve parameters must be distinct across the family")
    for n, ts in zip(counts, t_lists):
        if len(ts) != n:
            raise InvalidConstruction("parameter list length differs from the count")
    return [cyclic(d, ts) for ts in t_lists]


def verify_kface_bound_attained(family: Sequence[Polytope], k: int, ctx: SumContext | None = None) -> BoundReport:
    ctx = ctx or minkowski_sum(list(family))
    f = build_face_lattice(ctx.sum).f_vector()
    f0s = [p.n_vertices for p in family]
    return BoundReport(f"k={k} f0={tuple(f0s)}", f[k], trivial_kface_bound(f0s, k))


def attainable_range(d: int, n: int) -> range:
    return range(0, d // 2 - n + 1)


def neighbourly_failures(p: Polytope) -> list[tuple[int, ...]]:
    """Vertex subsets of size <= floor(d/2) whose hull is not a face."""
    bad = []
    for size in range(1, p.intrinsic_dim // 2 + 1):
        for subset in itertools.combinations(range(p.n_vertices), size):
            if p.face_from_vertices(subset).vertex_set != frozenset(subset):
                bad.append(subset)
    return bad

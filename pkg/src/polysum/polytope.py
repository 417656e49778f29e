"""Polytopes with linked V-representation, H-representation and incidences."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import core_math as cm
from ._hull import HullBuilder, vertex_mask


class NotCentered(ValueError):
    pass


class InvalidConstruction(ValueError):
    pass


@dataclass(frozen=True)
class Face:
    """A face, as indices into its polytope's vertex and facet lists.

    ``dim`` is -1 for the empty face.
    """

    vertex_set: frozenset
    dim: int
    facet_set: frozenset

    def __len__(self):
        return len(self.vertex_set)

    def __le__(self, other: "Face") -> bool:
        return self.vertex_set <= other.vertex_set

    def __lt__(self, other: "Face") -> bool:
        return self.vertex_set < other.vertex_set

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertex_set))


@dataclass(frozen=True, eq=False)
class Polytope:
    """A bounded polytope, possibly lower-dimensional in its ambient space.

    Facets are ``normal . x <= offset`` with a primitive integer ``normal``
    lying in the direction space of the affine hull, so facets of flat
    polytopes are taken relative to that hull. Build instances with
    :func:`convex_hull` rather than by hand.
    """

    ambient_dim: int
    vertices: tuple  # lexicographically sorted tuples of Fraction
    facets: tuple  # of (normal: tuple[int, ...], offset: Fraction)
    intrinsic_dim: int
    name: str = ""
    _facet_vertices: tuple = field(default=(), repr=False)

    # -- derived structure ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def full_dimensional(self) -> bool:
        return self.intrinsic_dim == self.ambient_dim

    def facet_vertices(self, j: int) -> frozenset:
        """Indices of the vertices on facet ``j``."""
        return self._facet_vertices[j]

    @property
    def incidence(self) -> tuple:
        """Boolean vertex-by-facet matrix."""
        return tuple(
            tuple(i in fv for fv in self._facet_vertices) for i in range(self.n_vertices)
        )

    def vertex_facets(self, i: int) -> frozenset:
        return frozenset(j for j, fv in enumerate(self._facet_vertices) if i in fv)

    def index_of(self, point) -> int:
        return self._index[tuple(cm.vec(point))]

    @property
    def _index(self) -> dict:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {v: i for i, v in enumerate(self.vertices)}
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def face_from_vertices(self, vertex_set) -> Face:
        """The smallest face containing the given vertices."""
        vs = frozenset(vertex_set)
        if not vs:
            return Face(frozenset(), -1, frozenset(range(self.n_facets)))
        fs = frozenset(j for j, fv in enumerate(self._facet_vertices) if vs <= fv)
        return self._face_from_facets(fs)

    def _face_from_facets(self, fs: frozenset) -> Face:
        if fs:
            vs = frozenset.intersection(*(self._facet_vertices[j] for j in fs))
        else:
            vs = frozenset(range(self.n_vertices))
        if not vs:
            return Face(frozenset(), -1, frozenset(range(self.n_facets)))
        # the facet set of a face is every facet containing its vertices
        fs = frozenset(j for j, fv in enumerate(self._facet_vertices) if vs <= fv)
        dim = self.intrinsic_dim - cm.rank([self.facets[j][0] for j in fs]) if fs else self.intrinsic_dim
        return Face(vs, dim, fs)

    def whole(self) -> Face:
        return Face(frozenset(range(self.n_vertices)), self.intrinsic_dim, frozenset())

    def points(self, face: Face) -> list:
        return [self.vertices[i] for i in sorted(face.vertex_set)]

    def same_as(self, other: "Polytope") -> bool:
        return self.ambient_dim == other.ambient_dim and self.vertices == other.vertices

    def transformed(self, matrix, name: str | None = None) -> "Polytope":
        return convex_hull([cm.apply(matrix, v) for v in self.vertices], self.ambient_dim,
                           name=self.name if name is None else name)

    def translated(self, t) -> "Polytope":
        return convex_hull([cm.add(v, cm.vec(t)) for v in self.vertices], self.ambient_dim, name=self.name)

    def scaled(self, alpha) -> "Polytope":
        alpha = cm.Q(alpha)
        return convex_hull([cm.scale(alpha, v) for v in self.vertices], self.ambient_dim, name=self.name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return (f"<Polytope{label} dim {self.intrinsic_dim} in R^{self.ambient_dim}: "
                f"{self.n_vertices} vertices, {self.n_facets} facets>")


# -- convex hull -----------------------------------------------------------------

def convex_hull(points: Sequence[Sequence], ambient_dim: int | None = None, name: str = "") -> Polytope:
    """Exact convex hull of a nonempty finite point set."""
    if not points:
        raise cm.EmptyInput("convex hull of no points")
    pts = sorted({cm.vec(p) for p in points})
    d = len(pts[0]) if ambient_dim is None else ambient_dim
    for p in pts:
        if len(p) != d:
            raise cm.DimensionMismatch(f"point {cm.fmt_vector(p)} is not in R^{d}")

    den = cm.common_denominator(x for p in pts for x in p)
    ints = [tuple(int(x * den) for x in p) for p in pts]
    base = ints[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in ints[1:]]
    r = len(cm.independent_subset(diffs, limit=d))

    if r == 0:
        return Polytope(d, (pts[0],), (), 0, name, ())

    cols = cm.pivot_columns([diffs[i] for i in cm.independent_subset(diffs, limit=d)])
    proj = [tuple(p[c] for c in cols) for p in ints]
    builder = HullBuilder(proj)
    raw = builder.facets((1 << len(proj)) - 1, r)
    vmask = vertex_mask(len(proj), [m for m, _, _ in raw])
    keep = [i for i in range(len(pts)) if vmask >> i & 1]
    vertices = tuple(pts[i] for i in keep)
    new_index = {old: new for new, old in enumerate(keep)}

    if r == d:
        lin_basis = None
    else:
        lin_basis = [diffs[i] for i in cm.independent_subset(diffs, limit=d)]

    facets = []
    for mask, normal, _ in raw:
        on = [i for i in keep if mask >> i & 1]
        if lin_basis is None:
            a = tuple(normal)  # pivot coordinates are all coordinates
        else:
            a = _relative_normal(lin_basis, [ints[i] for i in on], ints)
        b = Fraction(cm.dot(a, vertices[new_index[on[0]]]))
        facets.append((a, b))

    order = sorted(range(len(facets)), key=lambda j: facets[j])
    facets = [facets[j] for j in order]
    facet_vertices = tuple(
        frozenset(i for i, v in enumerate(vertices) if cm.dot(a, v) == b) for a, b in facets
    )
    return Polytope(d, vertices, tuple(facets), r, name, facet_vertices)


def _relative_normal(lin_basis, facet_pts, all_pts) -> tuple[int, ...]:
    """Outer normal of a facet of a flat polytope, inside its direction space."""
    p0 = facet_pts[0]
    diffs = [cm.sub(p, p0) for p in facet_pts[1:]]
    # coefficients c with (sum c_k l_k) orthogonal to the facet directions
    rows = [[cm.dot(l, df) for l in lin_basis] for df in diffs]
    if not rows:
        rows = [[0] * len(lin_basis)]
    kernel = cm.nullspace(rows, len(lin_basis))
    if len(kernel) != 1:
        raise AssertionError("facet does not span a hyperplane of the affine hull")
    c = kernel[0]
    n = cm.integer_direction(cm.vsum([cm.scale(ck, l) for ck, l in zip(c, lin_basis)]))
    level = cm.dot(n, p0)
    # non-vertex input points may sit on the facet, so look for one strictly off it
    other = next(p for p in all_pts if cm.dot(n, p) != level)
    if cm.dot(n, other) > level:
        n = tuple(-x for x in n)
    return n


# -- duality and support -----------------------------------------------------------

def is_centered(p: Polytope) -> bool:
    """True iff the origin lies in the relative interior of ``p``."""
    origin = cm.zero(p.ambient_dim)
    if p.intrinsic_dim == 0:
        return p.vertices[0] == origin
    aff = cm.affine_hull(list(p.vertices))
    if not aff.contains(origin):
        return False
    return all(b > 0 for _, b in p.facets)


def polar_dual(p: Polytope, name: str | None = None) -> Polytope:
    """The polar {x : <x, y> <= 1 for all y in p} of a centered full-dimensional polytope.

    Its vertices are the facet normals scaled to offset one; the hull call
    recomputes and checks the H-representation {<v, x> <= 1 : v vertex of p}.
    """
    if not p.full_dimensional:
        raise NotCentered("polar of a lower-dimensional polytope is unbounded")
    if not is_centered(p):
        raise NotCentered("origin is not an interior point, polar is unbounded")
    dual_vertices = [tuple(Fraction(x) / b for x in a) for a, b in p.facets]
    return convex_hull(dual_vertices, p.ambient_dim,
                       name=(p.name + "*" if p.name else "") if name is None else name)


def enumerate_vertices(inequalities, d: int) -> list[tuple]:
    """Vertices of {x : a . x <= b} by brute force over d-subsets of constraints.

    Slow; kept as an independent check of :func:`polar_dual`.
    """
    ineqs = [(cm.vec(a), cm.Q(b)) for a, b in inequalities]
    found = set()
    for combo in itertools.combinations(ineqs, d):
        rows = [a for a, _ in combo]
        if cm.rank(rows) < d:
            continue
        x = cm.solve(rows, [b for _, b in combo])
        if all(cm.dot(a, x) <= b for a, b in ineqs):
            found.add(x)
    return sorted(found)


def support_set(p: Polytope, c) -> Face:
    """Face of maximisers of ``<., c>``; the whole polytope when c = 0."""
    c = cm.vec(c)
    if len(c) != p.ambient_dim:
        raise cm.DimensionMismatch("direction and polytope dimensions differ")
    values = [cm.dot(v, c) for v in p.vertices]
    top = max(values)
    return p.face_from_vertices(i for i, x in enumerate(values) if x == top)


# -- constructors ---------------------------------------------------------------

def cube(d: int) -> Polytope:
    return convex_hull([cm.vec(v) for v in itertools.product([-1, 1], repeat=d)], d, name=f"cube{d}")


def cross_polytope(d: int) -> Polytope:
    pts = []
    for i in range(d):
        for s in (1, -1):
            pts.append(cm.scale(s, cm.unit(d, i)))
    return convex_hull(pts, d, name=f"cross{d}")


def simplex(d: int) -> Polytope:
    """conv(e_1, ..., e_d, -(1, ..., 1)): a centered d-simplex."""
    pts = [cm.unit(d, i) for i in range(d)] + [cm.vec([-1] * d)]
    return convex_hull(pts, d, name=f"simplex{d}")


def tetrahedron_pc() -> Polytope:
    """Regular tetrahedron with rational vertices, centred at the origin."""
    pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return convex_hull([cm.vec(v) for v in pts], 3, name="tetrahedron")


def moment_point(t, d: int) -> tuple:
    t = cm.Q(t)
    return tuple(t ** k for k in range(1, d + 1))


def cyclic(d: int, ts: Sequence) -> Polytope:
    ts = [cm.Q(t) for t in ts]
    if len(set(ts)) != len(ts):
        raise InvalidConstruction("cyclic polytope parameters must be pairwise distinct")
    return convex_hull([moment_point(t, d) for t in ts], d, name=f"cyclic{d}")


def polygon_halfcircle(ts: Sequence, axis: int, ambient_dim: int) -> Polytope:
    """Hull of rational unit half-circle points in the plane of e_axis and e_d.

    ``axis`` is 0-based and must differ from the last coordinate.
    """
    ts = [cm.Q(t) for t in ts]
    if len(set(ts)) != len(ts):
        raise InvalidConstruction("half-circle parameters must be pairwise distinct")
    if not 0 <= axis < ambient_dim - 1:
        raise InvalidConstruction("axis must be a coordinate other than the last")
    pts = []
    for t in ts:
        x, y = cm.rational_circle_point(t)
        v = [Fraction(0)] * ambient_dim
        v[axis], v[-1] = x, y
        pts.append(tuple(v))
    return convex_hull(pts, ambient_dim, name=f"halfcircle{axis}")


def segment(a, b) -> Polytope:
    a, b = cm.vec(a), cm.vec(b)
    return convex_hull([a, b], len(a), name="segment")


def from_points(points, name: str = "") -> Polytope:
    return convex_hull(points, name=name)


def box(lower, upper) -> Polytope:
    """Axis-parallel box with the given lower and upper corners."""
    lower, upper = cm.vec(lower), cm.vec(upper)
    pts = itertools.product(*[(lo, hi) for lo, hi in zip(lower, upper)])
    return convex_hull([tuple(p) for p in pts], len(lower), name="box")


KINDS = ("cube", "cross", "simplex", "tetrahedron", "cyclic", "halfcircle", "segment", "points", "box")


def construct(kind: str, **params) -> Polytope:
    """Dispatch to a named constructor; used by the command line."""
    if kind == "cube":
        return cube(int(params["dim"]))
    if kind == "cross":
        return cross_polytope(int(params["dim"]))
    if kind == "simplex":
        return simplex(int(params["dim"]))
    if kind in ("tetrahedron", "tetrahedron_pc"):
        return tetrahedron_pc()
    if kind == "cyclic":
        return cyclic(int(params["dim"]), params["t"])
    if kind in ("halfcircle", "polygon_halfcircle"):
        return polygon_halfcircle(params["t"], int(params.get("axis", 0)), int(params["dim"]))
    if kind == "segment":
        return segment(params["a"], params["b"])
    if kind in ("points", "from_points"):
        return from_points(params["points"])
    if kind == "box":
        return box(params["lower"], params["upper"])
    raise InvalidConstruction(f"unknown polytope kind {kind!r}")

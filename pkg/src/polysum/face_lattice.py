"""Face lattices, f-vectors, normal cones and dual faces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import core_math as cm
from .polytope import Face, NotCentered, Polytope, support_set


class TrivialFace(ValueError):
    pass


@dataclass(frozen=True)
class FaceLattice:
    polytope: Polytope
    faces: tuple  # every face, sorted by (dim, vertex indices); includes the empty face and P
    hasse_covers: tuple  # (lower index, upper index) into ``faces``

    @property
    def dim(self) -> int:
        return self.polytope.intrinsic_dim

    def by_dim(self, k: int) -> list[Face]:
        return [f for f in self.faces if f.dim == k]

    def nontrivial(self) -> list[Face]:
        return [f for f in self.faces if 0 <= f.dim < self.dim]

    def nonempty(self) -> list[Face]:
        return [f for f in self.faces if f.dim >= 0]

    def index(self, face: Face) -> int:
        return self._lookup[face.vertex_set]

    def find(self, vertex_set) -> Face:
        return self.faces[self._lookup[frozenset(vertex_set)]]

    @property
    def _lookup(self) -> dict:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = {f.vertex_set: i for i, f in enumerate(self.faces)}
            object.__setattr__(self, "_lookup_cache", cached)
        return cached

    def f_vector(self) -> tuple[int, ...]:
        return f_vector(self)


def build_face_lattice(p: Polytope) -> FaceLattice:
    """All faces, by closing the facet vertex sets under intersection."""
    n = p.n_vertices
    full = (1 << n) - 1
    facet_masks = [sum(1 << i for i in p.facet_vertices(j)) for j in range(p.n_facets)]
    seen = {full}
    stack = [full]
    while stack:
        m = stack.pop()
        for fm in facet_masks:
            g = m & fm
            if g not in seen:
                seen.add(g)
                stack.append(g)
    faces = []
    for m in seen:
        vs = frozenset(i for i in range(n) if m >> i & 1)
        if not vs:
            faces.append(Face(vs, -1, frozenset(range(p.n_facets))))
        elif m == full:
            faces.append(p.whole())
        else:
            fs = frozenset(j for j, fm in enumerate(facet_masks) if m & fm == m)
            dim = p.intrinsic_dim - cm.rank([p.facets[j][0] for j in fs])
            faces.append(Face(vs, dim, fs))
    faces.sort(key=lambda f: (f.dim, f.sorted_vertices()))

    masks = [sum(1 << i for i in f.vertex_set) for f in faces]
    by_dim: dict[int, list[int]] = {}
    for i, f in enumerate(faces):
        by_dim.setdefault(f.dim, []).append(i)
    covers = []
    for k in range(-1, p.intrinsic_dim):
        for lo in by_dim.get(k, []):
            for hi in by_dim.get(k + 1, []):
                if masks[lo] & masks[hi] == masks[lo]:
                    covers.append((lo, hi))
    return FaceLattice(p, tuple(faces), tuple(covers))


def f_vector(lattice: FaceLattice) -> tuple[int, ...]:
    counts = [0] * lattice.dim
    for f in lattice.faces:
        if 0 <= f.dim < lattice.dim:
            counts[f.dim] += 1
    return tuple(counts)


def euler_residual(lattice_or_fvector) -> int:
    """sum (-1)^k f_k - (1 - (-1)^d); zero for every polytope."""
    fv = lattice_or_fvector.f_vector() if isinstance(lattice_or_fvector, FaceLattice) else tuple(lattice_or_fvector)
    d = len(fv)
    return sum((-1) ** k * x for k, x in enumerate(fv)) - (1 - (-1) ** d)


def diamond_violations(lattice: FaceLattice) -> list[tuple[int, int, int]]:
    """Pairs G < F two ranks apart whose interval does not hold exactly two faces."""
    up: dict[int, set[int]] = {}
    for lo, hi in lattice.hasse_covers:
        up.setdefault(lo, set()).add(hi)
    bad = []
    for g in range(len(lattice.faces)):
        two_up: dict[int, int] = {}
        for h in up.get(g, ()):
            for f in up.get(h, ()):
                two_up[f] = two_up.get(f, 0) + 1
        for f, count in two_up.items():
            if count != 2:
                bad.append((g, f, count))
    return bad


# -- cones ------------------------------------------------------------------------

@dataclass(frozen=True)
class Cone:
    """{sum l_i g_i : l_i >= 0} for nonzero generators g_i."""

    generators: tuple

    @property
    def ambient_dim(self) -> int:
        return len(self.generators[0])

    @property
    def dim(self) -> int:
        return cm.rank(list(self.generators))

    def contains(self, x) -> bool:
        """Membership in the (closed) cone."""
        x = cm.vec(x)
        if not self.generators:
            return all(c == 0 for c in x)
        a = cm.transpose(self.generators)
        return cm.feasible_nonnegative(a, x) is not None

    def relint_contains(self, x) -> bool:
        """Is x = sum l_i g_i with every l_i > 0 solvable?

        Scale-free form: t x = sum (1 + m_i) g_i with m_i, t >= 0.
        """
        x = cm.vec(x)
        if not self.generators:
            return all(c == 0 for c in x)
        gens = self.generators
        d = len(x)
        # columns: m_1..m_k, t
        a = [[g[r] for g in gens] + [-x[r]] for r in range(d)]
        b = [-sum((g[r] for g in gens), Fraction(0)) for r in range(d)]
        sol = cm.feasible_nonnegative(a, b)
        if sol is None:
            return False
        if sol[-1] > 0:
            return True
        # t = 0: the generators with positive weights sum to zero, so the cone
        # holds a line; x is then in the relative interior iff x is in the span
        return cm.rank(list(gens) + [x]) == cm.rank(list(gens))

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)


def _lineality_basis(p: Polytope) -> list[tuple]:
    """Basis of the orthogonal complement of the direction space of aff(p)."""
    if p.full_dimensional:
        return []
    aff = cm.affine_hull(list(p.vertices))
    if aff.dim == 0:
        return [cm.unit(p.ambient_dim, i) for i in range(p.ambient_dim)]
    return cm.nullspace(list(aff.direction_basis))


def normal_cone(p: Polytope, face: Face) -> Cone:
    """Closure of the outer normal cone, generated by the facet normals at ``face``.

    For flat polytopes the orthogonal complement of the affine hull is added
    as a lineality space.
    """
    if face.dim < 0 or face.dim == p.intrinsic_dim:
        raise TrivialFace("normal cones here are for nontrivial faces only")
    gens = [tuple(Fraction(x) for x in p.facets[j][0]) for j in sorted(face.facet_set)]
    for b in _lineality_basis(p):
        gens.append(b)
        gens.append(cm.scale(-1, b))
    return Cone(tuple(gens))


def cone_interior_point(cone: Cone) -> tuple:
    """Sum of the generators, a point of the relative interior."""
    if not cone.generators:
        raise ValueError("zero cone has no nonzero interior point")
    return cm.vsum(list(cone.generators))


def witness_direction(p: Polytope, face: Face) -> tuple:
    """Some c with support_set(p, c) = face (c = 0 for the whole polytope)."""
    if face.dim == p.intrinsic_dim:
        return cm.zero(p.ambient_dim)
    return cone_interior_point(normal_cone(p, face))


def in_relint(p: Polytope, face: Face, x) -> bool:
    """x on every facet through ``face`` and strictly inside every other one."""
    x = cm.vec(x)
    if face.dim < 0:
        return False
    if not p.full_dimensional:
        aff = cm.affine_hull(list(p.vertices))
        if not aff.contains(x):
            return False
    if face.dim == 0:
        return x == p.vertices[next(iter(face.vertex_set))]
    for j, (a, b) in enumerate(p.facets):
        val = cm.dot(a, x)
        if j in face.facet_set:
            if val != b:
                return False
        elif val >= b:
            return False
    return True


def dual_face(p: Polytope, face: Face, dual: Polytope) -> Face:
    """F^D: the face of ``dual`` (the polar of p) at inner product 1 with all of F."""
    if face.dim < 0 or face.dim == p.intrinsic_dim:
        raise TrivialFace("dual faces are defined here for nontrivial faces")
    pts = p.points(face)
    vs = [i for i, w in enumerate(dual.vertices) if all(cm.dot(w, f) == 1 for f in pts)]
    return dual.face_from_vertices(vs)


# -- exports -----------------------------------------------------------------------

def lattice_text(lattice: FaceLattice) -> str:
    lines = [f"# faces of {lattice.polytope.name or 'polytope'}: dim then vertex indices"]
    for f in lattice.faces:
        lines.append(f"{f.dim}: " + " ".join(str(i) for i in f.sorted_vertices()))
    return "\n".join(lines) + "\n"


def lattice_dot(lattice: FaceLattice) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, f in enumerate(lattice.faces):
        label = "{" + ",".join(str(v) for v in f.sorted_vertices()) + "}"
        lines.append(f'  f{i} [label="{f.dim}: {label}"];')
    for lo, hi in lattice.hasse_covers:
        lines.append(f"  f{lo} -> f{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def boundary_order(p: Polytope, lattice: FaceLattice, facet: Face) -> list[int]:
    """Vertices of a polygonal facet of a 3-polytope in cyclic order, outward CCW."""
    edges = [f.vertex_set for f in lattice.by_dim(1) if f.vertex_set <= facet.vertex_set]
    nbrs: dict[int, list[int]] = {}
    for e in edges:
        a, b = sorted(e)
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    start = min(facet.vertex_set)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = next(v for v in nbrs[cur] if v != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) >= 3:
        a, b, c = (p.vertices[i] for i in order[:3])
        u, v = cm.sub(b, a), cm.sub(c, b)
        cross = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        j = min(facet.facet_set)
        if cm.dot(cross, p.facets[j][0]) < 0:
            order = [order[0]] + order[1:][::-1]
    return order


def closure_order_holds(p: Polytope, lattice: FaceLattice, g: Face, f: Face) -> bool:
    """G subset F iff cl N(F) is contained in cl N(G), checked on generators."""
    def closed_cone(face):
        if face.dim == p.intrinsic_dim:
            return Cone(tuple(_lineality_pairs(p)))
        return normal_cone(p, face)

    outer, inner = closed_cone(g), closed_cone(f)
    return (g.vertex_set <= f.vertex_set) == all(outer.contains(x) for x in inner.generators)


def _lineality_pairs(p: Polytope) -> list[tuple]:
    out = []
    for b in _lineality_basis(p):
        out.extend([b, cm.scale(-1, b)])
    return out


def sample_support_is_vertex(p: Polytope, c: Sequence) -> bool:
    return support_set(p, c).dim == 0


__all__ = [
    "Cone", "FaceLattice", "NotCentered", "TrivialFace", "build_face_lattice", "cone_interior_point",
    "diamond_violations", "dual_face", "euler_residual", "f_vector", "in_relint", "lattice_dot",
    "lattice_text", "normal_cone", "witness_direction",
]

"""Perfect centering, Nesterov rounding P + P*, and the predicted face lattice of the rounding."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import core_math as cm
from .face_lattice import FaceLattice, build_face_lattice, dual_face, in_relint
from .minkowski import SumContext, decompose_face, minkowski_sum
from .polytope import Face, Polytope, is_centered, polar_dual, support_set


class NotPerfectlyCentered(ValueError):
    pass


class NotFullDimensional(ValueError):
    pass


# -- perfect centering -------------------------------------------------------------

@dataclass
class PerfectCenterReport:
    name: str
    witnesses: dict  # vertex set of each nontrivial face -> witness point or None
    failures: dict  # vertex set -> reason
    centered: bool

    @property
    def overall(self) -> bool:
        return self.centered and not self.failures

    def witness(self, face: Face):
        return self.witnesses.get(face.vertex_set)


def face_witness(p: Polytope, face: Face) -> tuple[tuple | None, str]:
    """The unique point of relint(F) in N(F; p), or None with the reason it fails.

    A point of relint(F) inside N(F; p) is orthogonal to the direction space
    of F, so the only candidate is the foot of the perpendicular from the
    origin onto aff(F).
    """
    aff = cm.affine_hull(p.points(face))
    m = cm.project_onto_affine(cm.zero(p.ambient_dim), aff)
    if not in_relint(p, face, m):
        return None, "nearest point of the affine hull lies outside the relative interior"
    if support_set(p, m).vertex_set != face.vertex_set:
        return None, "nearest point is not an outer normal of the face"
    return m, ""


def perfectly_centered_witnesses(p: Polytope, lattice: FaceLattice | None = None) -> PerfectCenterReport:
    if not p.full_dimensional:
        raise NotFullDimensional("perfect centering is defined for full-dimensional polytopes")
    lattice = lattice or build_face_lattice(p)
    witnesses, failures = {}, {}
    for face in lattice.nontrivial():
        m, why = face_witness(p, face)
        witnesses[face.vertex_set] = m
        if m is None:
            failures[face.vertex_set] = why
    return PerfectCenterReport(p.name, witnesses, failures, is_centered(p))


def is_perfectly_centered(p: Polytope) -> bool:
    return perfectly_centered_witnesses(p).overall


# -- rounding ----------------------------------------------------------------------

def nesterov_round(p: Polytope, alpha=1) -> SumContext:
    """P + alpha P*, with P's polar as the second summand."""
    alpha = cm.Q(alpha)
    dual = polar_dual(p)
    if alpha != 1:
        dual = dual.scaled(alpha)
    return minkowski_sum([p, dual], name=f"NR({p.name or 'P'})")


def closed_form_fvector(kind: str, d: int) -> tuple[int, ...]:
    """f-vector of the rounding of a perfectly centered simplex or cube."""
    if d < 1:
        raise ValueError("dimension must be positive")
    if kind == "simplex":
        return tuple(math.comb(d + 1, k + 2) * (2 ** (k + 2) - 2) for k in range(d))
    if kind == "cube":
        return tuple(math.comb(d, k + 1) * 2 ** (d - k - 1) * (3 ** (k + 1) - 1) for k in range(d))
    raise ValueError(f"no closed form for {kind!r}")


# -- predicted lattice of the rounding ----------------------------------------------

@dataclass
class PredictedLattice:
    """Ordered pairs (G, F) of nontrivial faces of P with G inside F.

    (G1, F1) <= (G2, F2) iff G1 in G2 and F1 contains F2; the pair is
    expected to have dimension dim G + d - 1 - dim F.
    """

    lattice: FaceLattice
    d: int
    _below: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        faces = self.lattice.faces
        nontrivial = [0 <= f.dim < self.d for f in faces]
        below = [0] * len(faces)
        order = sorted(range(len(faces)), key=lambda i: faces[i].dim)
        down: dict[int, list[int]] = {}
        for lo, hi in self.lattice.hasse_covers:
            down.setdefault(hi, []).append(lo)
        for i in order:
            mask = 1 << i if nontrivial[i] else 0
            for j in down.get(i, ()):
                mask |= below[j]
            below[i] = mask
        self._below = below
        self._nontrivial = nontrivial

    def dim_of(self, g: Face, f: Face) -> int:
        return g.dim + self.d - 1 - f.dim

    def elements(self) -> list[tuple[Face, Face]]:
        faces = self.lattice.faces
        out = []
        for fi, f in enumerate(faces):
            if not self._nontrivial[fi]:
                continue
            mask = self._below[fi]
            while mask:
                low = mask & -mask
                out.append((faces[low.bit_length() - 1], f))
                mask ^= low
        return out

    def counts_by_dim(self) -> tuple[int, ...]:
        faces = self.lattice.faces
        dim_masks: dict[int, int] = {}
        for i, f in enumerate(faces):
            dim_masks[f.dim] = dim_masks.get(f.dim, 0) | (1 << i)
        counts = [0] * self.d
        for fi, f in enumerate(faces):
            if not self._nontrivial[fi]:
                continue
            for k in range(f.dim + 1):
                n = (self._below[fi] & dim_masks.get(k, 0)).bit_count()
                if n:
                    counts[k + self.d - 1 - f.dim] += n
        return tuple(counts)

    def size(self) -> int:
        return sum(self._below[i].bit_count() for i in range(len(self._below)) if self._nontrivial[i])

    def covers(self) -> set:
        """Covering pairs, as ((G1, F1), (G2, F2)) of vertex sets."""
        faces = self.lattice.faces
        up: dict[int, list[int]] = {}
        down: dict[int, list[int]] = {}
        for lo, hi in self.lattice.hasse_covers:
            if self._nontrivial[lo] and self._nontrivial[hi]:
                up.setdefault(lo, []).append(hi)
                down.setdefault(hi, []).append(lo)
        idx = self.lattice.index
        out = set()
        for g, f in self.elements():
            gi, fi = idx(g), idx(f)
            for g2 in up.get(gi, ()):
                if faces[g2].vertex_set <= f.vertex_set:
                    out.add(((g.vertex_set, f.vertex_set), (faces[g2].vertex_set, f.vertex_set)))
            for f2 in down.get(fi, ()):
                if g.vertex_set <= faces[f2].vertex_set:
                    out.add(((g.vertex_set, f.vertex_set), (g.vertex_set, faces[f2].vertex_set)))
        return out


def predicted_rounding_lattice(lattice: FaceLattice, d: int | None = None) -> PredictedLattice:
    return PredictedLattice(lattice, lattice.dim if d is None else d)


# -- mechanical check of the rounding lattice ---------------------------------------

@dataclass
class RoundingVerification:
    name: str
    fvector: tuple
    predicted_fvector: tuple
    bijective: bool
    dims_preserved: bool
    order_preserved: bool
    facets_are_f_plus_dual: bool
    problems: list

    @property
    def ok(self) -> bool:
        return (self.bijective and self.dims_preserved and self.order_preserved
                and self.facets_are_f_plus_dual and self.fvector == self.predicted_fvector)


def rounding_labels(p: Polytope, ctx: SumContext, sum_lattice: FaceLattice, alpha=1):
    """Map each nontrivial face of P + alpha P* to its pair (G, F) of faces of P.

    G is the P-part of the decomposition and F is recovered from the P*-part
    as the face of P at inner product 1 with it. Returns (labels, problems).
    """
    alpha = cm.Q(alpha)
    dual_summand = ctx.summands[1]
    labels = {}
    problems = []
    for h in sum_lattice.nontrivial():
        dec = decompose_face(ctx, h)
        g, fd = dec.parts
        if not (0 <= g.dim < p.intrinsic_dim) or not (0 <= fd.dim < p.intrinsic_dim):
            problems.append(f"face {sorted(h.vertex_set)} decomposes into a trivial part")
            continue
        pts = [cm.scale(1 / alpha, w) for w in dual_summand.points(fd)]
        f = p.face_from_vertices(
            i for i, v in enumerate(p.vertices) if all(cm.dot(v, w) == 1 for w in pts)
        )
        labels[h.vertex_set] = (g, f)
    return labels, problems


def verify_rounding(p: Polytope, pc_report: PerfectCenterReport | None = None) -> RoundingVerification:
    """Check that faces of P + P* are exactly the sums G + F^D for nontrivial G in F."""
    pc_report = pc_report or perfectly_centered_witnesses(p)
    if not pc_report.overall:
        raise NotPerfectlyCentered(f"{p.name or 'polytope'} is not perfectly centered")
    d = p.intrinsic_dim
    lat = build_face_lattice(p)
    pred = predicted_rounding_lattice(lat, d)
    ctx = nesterov_round(p)
    slat = build_face_lattice(ctx.sum)
    labels, problems = rounding_labels(p, ctx, slat)

    images = {(g.vertex_set, f.vertex_set) for g, f in labels.values()}
    expected = {(g.vertex_set, f.vertex_set) for g, f in pred.elements()}
    bijective = not problems and len(images) == len(labels) == len(slat.nontrivial()) and images == expected
    if images != expected:
        problems.append(f"{len(images ^ expected)} pairs differ from the prediction")

    dims_ok = True
    for h in slat.nontrivial():
        if h.vertex_set in labels:
            g, f = labels[h.vertex_set]
            if not g.vertex_set <= f.vertex_set or h.dim != pred.dim_of(g, f):
                dims_ok = False
                problems.append(f"dimension mismatch at {sorted(h.vertex_set)}")

    image_covers = set()
    for lo, hi in slat.hasse_covers:
        a, b = slat.faces[lo], slat.faces[hi]
        if a.vertex_set in labels and b.vertex_set in labels:
            ga, fa = labels[a.vertex_set]
            gb, fb = labels[b.vertex_set]
            image_covers.add(((ga.vertex_set, fa.vertex_set), (gb.vertex_set, fb.vertex_set)))
    order_ok = image_covers == pred.covers()
    if not order_ok:
        problems.append("Hasse covers are not mapped onto predicted covers")

    facets = [h for h in slat.nontrivial() if h.dim == d - 1]
    facet_ok = (len(facets) == len(lat.nontrivial())
                and all(labels[h.vertex_set][0] == labels[h.vertex_set][1] for h in facets if h.vertex_set in labels))

    return RoundingVerification(
        name=p.name,
        fvector=slat.f_vector(),
        predicted_fvector=pred.counts_by_dim(),
        bijective=bijective,
        dims_preserved=dims_ok,
        order_preserved=order_ok,
        facets_are_f_plus_dual=facet_ok,
        problems=problems,
    )


def scaling_invariant(p: Polytope, alpha) -> bool:
    """Same pair labels, dimensions and covers for P + alpha P* as for P + P*."""
    def signature(a):
        ctx = nesterov_round(p, a)
        slat = build_face_lattice(ctx.sum)
        labels, problems = rounding_labels(p, ctx, slat, a)
        if problems:
            return None
        key = {h: (g.vertex_set, f.vertex_set) for h, (g, f) in labels.items()}
        faces = {key[h.vertex_set]: h.dim for h in slat.nontrivial()}
        covers = {(key[slat.faces[lo].vertex_set], key[slat.faces[hi].vertex_set])
                  for lo, hi in slat.hasse_covers
                  if slat.faces[lo].vertex_set in key and slat.faces[hi].vertex_set in key}
        return faces, covers

    base = signature(1)
    return base is not None and base == signature(alpha)


def witness_composition_failures(p: Polytope) -> list:
    """Pairs G in F for which m_G + m_{F^D} does not select G + F^D in P + P*."""
    dual = polar_dual(p)
    ctx = minkowski_sum([p, dual])
    lat = build_face_lattice(p)
    rep = perfectly_centered_witnesses(p, lat)
    dual_rep = perfectly_centered_witnesses(dual)
    bad = []
    for g, f in predicted_rounding_lattice(lat).elements():
        fd = dual_face(p, f, dual)
        mg, mfd = rep.witness(g), dual_rep.witness(fd)
        if mg is None or mfd is None:
            bad.append((g.vertex_set, f.vertex_set))
            continue
        target = ctx.sum_face_from_parts([g, fd])
        if support_set(ctx.sum, cm.add(mg, mfd)).vertex_set != target:
            bad.append((g.vertex_set, f.vertex_set))
    return bad


# -- repeated rounding in dimension three ------------------------------------------

def repeated_fvector(f1: tuple, n: int) -> tuple[int, int, int]:
    """f-vector after n roundings of a perfectly centered 3-polytope, from the first."""
    f0, _, f2 = f1
    q = 4 ** (n - 1)
    return (q * f0, 2 * q * f0, f2 + (q - 1) * f0)


@dataclass
class RepeatedRoundingStep:
    n: int
    predicted: tuple
    computed: tuple | None  # None when not computed geometrically
    perfectly_centered: bool | None
    euler_residual: int | None

    @property
    def ratio(self) -> Fraction:
        f0, _, f2 = self.predicted
        return Fraction(f2, f0)


def repeated_round_check(p: Polytope, n: int, geometric_rounds: int | None = None) -> list[RepeatedRoundingStep]:
    """Round ``n`` times, comparing each f-vector with the closed recurrences.

    Only the first ``geometric_rounds`` iterates (default all) are computed as
    polytopes; later steps carry the recurrence values alone.
    """
    if p.intrinsic_dim != 3 or p.ambient_dim != 3:
        raise ValueError("repeated rounding recurrences are for 3-polytopes")
    if not is_perfectly_centered(p):
        raise NotPerfectlyCentered("starting polytope is not perfectly centered")
    geometric_rounds = n if geometric_rounds is None else min(n, geometric_rounds)
    steps = []
    current = p
    f1 = None
    for i in range(1, n + 1):
        computed = pc = res = None
        if i <= geometric_rounds:
            current = nesterov_round(current).sum
            lat = build_face_lattice(current)
            computed = lat.f_vector()
            pc = perfectly_centered_witnesses(current, lat).overall
            if not pc:
                raise AssertionError(f"rounding {i} lost perfect centering")
            res = sum((-1) ** k * x for k, x in enumerate(computed)) - 2
        if i == 1:
            f1 = computed if computed is not None else None
            if f1 is None:
                raise ValueError("the first rounding must be computed")
        steps.append(RepeatedRoundingStep(i, repeated_fvector(f1, i), computed, pc, res))
    return steps

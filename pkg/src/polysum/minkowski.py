"""Minkowski sums with vertex provenance, face decomposition and the trivial bounds."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from . import core_math as cm
from .face_lattice import witness_direction
from .polytope import Face, Polytope, convex_hull, support_set


@dataclass(frozen=True, eq=False)
class SumContext:
    summands: tuple
    sum: Polytope
    vertex_provenance: tuple  # per sum vertex, the summand vertex index tuple

    def provenance_of(self, i: int) -> tuple[int, ...]:
        return self.vertex_provenance[i]

    def sum_face_from_parts(self, parts: Sequence[Face]) -> frozenset:
        """Sum vertices whose decomposition lies in the given summand faces."""
        sets = [f.vertex_set for f in parts]
        return frozenset(
            i for i, prov in enumerate(self.vertex_provenance)
            if all(j in s for j, s in zip(prov, sets))
        )


@dataclass(frozen=True)
class FaceDecomposition:
    face: Face
    parts: tuple  # one Face per summand
    exact: bool

    @property
    def part_dims(self) -> tuple[int, ...]:
        return tuple(f.dim for f in self.parts)


def minkowski_sum(summands: Sequence[Polytope], name: str = "") -> SumContext:
    """Hull of all vertex-tuple sums, keeping each sum vertex's decomposition."""
    if not summands:
        raise cm.EmptyInput("need at least one summand")
    d = summands[0].ambient_dim
    for p in summands:
        if p.ambient_dim != d:
            raise cm.DimensionMismatch("summands live in different ambient spaces")
    origin: dict[tuple, list[tuple[int, ...]]] = {}
    for combo in itertools.product(*(range(p.n_vertices) for p in summands)):
        point = cm.vsum([p.vertices[i] for p, i in zip(summands, combo)])
        origin.setdefault(point, []).append(combo)
    total = convex_hull(list(origin), d, name=name or "+".join(p.name or "P" for p in summands))
    provenance = []
    for v in total.vertices:
        combos = origin[v]
        if len(combos) != 1:
            raise AssertionError("a sum vertex has two decompositions")
        provenance.append(combos[0])
    return SumContext(tuple(summands), total, tuple(provenance))


def decompose_face(ctx: SumContext, face: Face) -> FaceDecomposition:
    """The unique decomposition F = F_1 + ... + F_k, via a common maximising direction."""
    if face.dim < 0:
        raise ValueError("the empty face has no decomposition")
    c = witness_direction(ctx.sum, face)
    parts = tuple(support_set(p, c) for p in ctx.summands)
    if ctx.sum_face_from_parts(parts) != face.vertex_set:
        raise AssertionError("re-summed parts differ from the face")
    return FaceDecomposition(face, parts, face.dim == sum(f.dim for f in parts))


def sum_facets(ctx: SumContext) -> list[Face]:
    p = ctx.sum
    return [p.face_from_vertices(p.facet_vertices(j)) for j in range(p.n_facets)]


def relatively_in_general_position(ctx: SumContext) -> tuple[bool, list[FaceDecomposition]]:
    """Every facet of the sum decomposes exactly; returns the flag and the violators."""
    bad = [dec for dec in map(lambda f: decompose_face(ctx, f), sum_facets(ctx)) if not dec.exact]
    return not bad, bad


def trivial_vertex_bound(f0s: Sequence[int]) -> int:
    return math.prod(f0s)


def compositions(f0s: Sequence[int], total: int):
    """Integer tuples with 1 <= s_i <= f0s[i] summing to ``total``."""
    if not f0s:
        if total == 0:
            yield ()
        return
    head, rest = f0s[0], f0s[1:]
    for s in range(1, min(head, total - len(rest)) + 1):
        for tail in compositions(rest, total - s):
            yield (s,) + tail


def trivial_kface_bound(f0s: Sequence[int], k: int) -> int:
    """Number of vertex-selection patterns that could decompose a k-face."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = len(f0s)
    return sum(
        math.prod(math.comb(f, s) for f, s in zip(f0s, comp))
        for comp in compositions(list(f0s), k + n)
    )

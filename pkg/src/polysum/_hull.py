"""Exact facet enumeration for integer point sets.

Gift wrapping in the style of Chand and Kapur: one facet is found by recursive
projection, and every facet's ridges come from a recursive hull of the points
on that facet. Ridge point sets are memoised by bitmask so each face of the
polytope is wrapped once, however many times it is reached.

Everything here works on tuples of Python ints. Callers clear denominators
first; a common scaling leaves the combinatorics unchanged.
"""

from __future__ import annotations

import math

from .core_math import primitive


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _reduce(row, basis):
    for p, b in basis:
        f = row[p]
        if f:
            g = b[p]
            row = [x * g - f * y for x, y in zip(row, b)]
    return row


def _independent(vectors, limit):
    """Greedy linearly independent subfamily (indices) and its pivot columns."""
    basis: list[tuple[int, list[int]]] = []
    chosen: list[int] = []
    for idx, v in enumerate(vectors):
        row = _reduce(list(v), basis)
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            continue
        basis.append((piv, list(primitive(row))))
        chosen.append(idx)
        if len(chosen) >= limit:
            break
    return chosen, basis


def _affine_dim(pts) -> int:
    base = pts[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in pts[1:]]
    return len(_independent(diffs, len(base))[0])


def _pivot_coords(pts, dim: int) -> list[int]:
    """Coordinates on which the affine hull of ``pts`` projects bijectively."""
    base = pts[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in pts[1:]]
    _, basis = _independent(diffs, dim)
    # the greedy reduction is not fully echelon; finish it to read off pivots
    rows = [b for _, b in basis]
    cols: list[int] = []
    done: list[tuple[int, list[int]]] = []
    for r in rows:
        r = _reduce(r, done)
        piv = next(j for j, x in enumerate(r) if x)
        done.append((piv, r))
        cols.append(piv)
    return sorted(cols)


def _nullvector(rows, k: int) -> tuple[int, ...]:
    """Primitive generator of the kernel of a rank k-1 integer matrix."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        top = m[r]
        piv = top[c]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = list(primitive([x * piv - f * y for x, y in zip(m[i], top)]))
        pivots.append(c)
        r += 1
    free = [c for c in range(k) if c not in pivots]
    if len(free) != 1:
        raise ValueError(f"kernel has dimension {len(free)}, expected 1")
    f = free[0]
    lcm = 1
    for i in range(len(pivots)):
        a = abs(m[i][pivots[i]])
        lcm = lcm * a // math.gcd(lcm, a)
    x = [0] * k
    x[f] = lcm
    for i, p in enumerate(pivots):
        x[p] = -m[i][f] * (lcm // m[i][p])
    return primitive(x)


def _rotate(points, normal, offset, ridge_idx, outward_hint=None, slack=None):
    """Rotate the supporting hyperplane ``normal . x <= offset`` about a ridge.

    ``ridge_idx`` lists the points on the ridge, which must be exactly the
    points lying on the current hyperplane, or a subset of them when the
    hyperplane is a facet and ``outward_hint`` names a facet point off the
    ridge. ``slack`` may carry the precomputed ``normal . q - offset`` values.
    Returns the new facet hyperplane (primitive normal, offset).
    """
    k = len(normal)
    r0 = points[ridge_idx[0]]
    diffs = [tuple(x - y for x, y in zip(points[i], r0)) for i in ridge_idx[1:]]
    keep, _ = _independent(diffs, k - 2)
    rows = [list(normal)] + [list(diffs[i]) for i in keep]
    u = _nullvector(rows, k)
    ur = _dot(u, r0)
    if outward_hint is not None and _dot(u, points[outward_hint]) - ur > 0:
        u = tuple(-x for x in u)
        ur = -ur
    best_t, best_s = None, None
    if slack is None:
        slack = [_dot(normal, q) - offset for q in points]
    for q, s in zip(points, slack):
        if s >= 0:
            continue
        t = _dot(u, q) - ur
        # maximise t / (-s)
        if best_t is None or t * (-best_s) > best_t * (-s):
            best_t, best_s = t, s
    m = primitive([(-best_s) * a + best_t * b for a, b in zip(u, normal)])
    return m, _dot(m, r0)


def _initial_facet(points) -> tuple[tuple[int, ...], int]:
    """Some facet of a full-dimensional point set in Z^k."""
    k = len(points[0])
    if k == 1:
        lo = min(p[0] for p in points)
        return (-1,), -lo
    a, beta = _initial_facet([p[:-1] for p in points])
    normal = tuple(a) + (0,)
    on = [i for i, p in enumerate(points) if _dot(normal, p) == beta]
    if _affine_dim([points[i] for i in on]) == k - 1:
        return normal, beta
    return _rotate(points, normal, beta, on)


class HullBuilder:
    """Facets of conv(points) and of every face reached while wrapping.

    ``points`` are distinct integer tuples. Faces are bitmasks over the point
    indices; :meth:`facets` returns ``(mask, normal, offset)`` with the normal
    expressed in the pivot coordinates chosen for that face.
    """

    def __init__(self, points):
        self.points = [tuple(p) for p in points]
        self._cache: dict[int, list[tuple[int, tuple[int, ...], int]]] = {}

    def facets(self, mask: int, dim: int | None = None):
        hit = self._cache.get(mask)
        if hit is not None:
            return hit
        idx = _bits(mask)
        pts = [self.points[i] for i in idx]
        if dim is None:
            dim = _affine_dim(pts)
        if dim <= 0:
            result = []
        else:
            cols = _pivot_coords(pts, dim)
            proj = [tuple(p[c] for c in cols) for p in pts]
            result = self._wrap(idx, proj, dim)
        self._cache[mask] = result
        return result

    def _wrap(self, idx, proj, dim):
        if dim == 1:
            xs = [p[0] for p in proj]
            lo, hi = min(xs), max(xs)
            lo_mask = sum(1 << idx[i] for i, x in enumerate(xs) if x == lo)
            hi_mask = sum(1 << idx[i] for i, x in enumerate(xs) if x == hi)
            return [(lo_mask, (-1,), -lo), (hi_mask, (1,), hi)]

        local = {g: i for i, g in enumerate(idx)}

        def on_plane(normal, offset):
            return [i for i, p in enumerate(proj) if _dot(normal, p) == offset]

        def to_mask(local_idx):
            return sum(1 << idx[i] for i in local_idx)

        normal, offset = _initial_facet(proj)
        first = on_plane(normal, offset)
        found = {to_mask(first): (normal, offset, first)}
        queue = [to_mask(first)]
        crossed: set[int] = set()
        while queue:
            fmask = queue.pop()
            normal, offset, members = found[fmask]
            slack = [_dot(normal, q) - offset for q in proj]
            for rmask, _, _ in self.facets(fmask, dim - 1):
                if rmask in crossed:
                    continue
                crossed.add(rmask)
                ridge = [local[g] for g in _bits(rmask)]
                ridge_set = set(ridge)
                hint = next(i for i in members if i not in ridge_set)
                n2, o2 = _rotate(proj, normal, offset, ridge, hint, slack)
                on2 = on_plane(n2, o2)
                m2 = to_mask(on2)
                if m2 not in found:
                    found[m2] = (n2, o2, on2)
                    queue.append(m2)
        return [(m, n, o) for m, (n, o, _) in sorted(found.items())]


def vertex_mask(n_points: int, facet_masks) -> int:
    """Bitmask of the points that are vertices, given the facet point sets."""
    if n_points == 1:
        return 1
    full = (1 << n_points) - 1
    meet = [full] * n_points
    for fm in facet_masks:
        for i in _bits(fm):
            meet[i] &= fm
    return sum(1 << i for i in range(n_points) if meet[i] == 1 << i)

"""Independent reference computations used to cross-check the library.

Nothing here imports polysum; linear algebra goes through sympy.
"""
import itertools
import math
from fractions import Fraction
from math import comb

import sympy


def smat(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                          for x in row] for row in rows])


def to_fraction(x):
    x = sympy.Rational(sympy.expand(x))
    return Fraction(int(x.p), int(x.q))


def brute_force_facets(points):
    """Facet hyperplanes of a full-dimensional point set, as (primitive normal, offset) pairs.

    Every d-subset spanning a hyperplane with all points weakly on one side gives a facet.
    """
    pts = [tuple(Fraction(x) for x in p) for p in set(points)]
    d = len(pts[0])
    found = set()
    for combo in itertools.combinations(pts, d):
        base = combo[0]
        rows = [[a - b for a, b in zip(q, base)] for q in combo[1:]]
        ns = smat(rows).nullspace() if rows else [sympy.eye(d)[:, 0]]
        if len(ns) != 1:
            continue
        n = [to_fraction(x) for x in ns[0]]
        den = 1
        for x in n:
            den = den * x.denominator // math.gcd(den, x.denominator)
        n = [int(x * den) for x in n]
        g = 0
        for x in n:
            g = math.gcd(g, x)
        n = [x // g for x in n]
        off = sum(a * b for a, b in zip(n, base))
        vals = [sum(a * b for a, b in zip(n, q)) for q in pts]
        if all(v <= off for v in vals):
            found.add((tuple(n), off))
        elif all(v >= off for v in vals):
            found.add((tuple(-x for x in n), -off))
    return found


def brute_force_vertices(points):
    """Points lying on facet hyperplanes whose normals span the whole space."""
    facets = brute_force_facets(points)
    d = len(next(iter(points)))
    out = set()
    for p in set(tuple(Fraction(x) for x in q) for q in points):
        normals = [n for n, b in facets if sum(a * x for a, x in zip(n, p)) == b]
        if normals and smat(normals).rank() == d:
            out.add(p)
    return out


def cube_fvector(d):
    return tuple(comb(d, k) * 2 ** (d - k) for k in range(d))


def cross_fvector(d):
    return tuple(comb(d, k + 1) * 2 ** (k + 1) for k in range(d))


def simplex_fvector(d):
    return tuple(comb(d + 1, k + 1) for k in range(d))


def rounding_simplex(d):
    return tuple(comb(d + 1, k + 2) * (2 ** (k + 2) - 2) for k in range(d))


def rounding_cube(d):
    return tuple(comb(d, k + 1) * 2 ** (d - k - 1) * (3 ** (k + 1) - 1) for k in range(d))


def kface_bound_by_enumeration(f0s, k):
    """Choose a nonempty vertex subset per summand with sizes summing to k + n; count."""
    n = len(f0s)
    total = 0
    for sizes in itertools.product(*[range(1, m + 1) for m in f0s]):
        if sum(sizes) == k + n:
            prod = 1
            for m, s in zip(f0s, sizes):
                prod *= comb(m, s)
            total += prod
    return total

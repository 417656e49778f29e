"""Exact rational scalars, vectors and the linear algebra used by every predicate.

Scalars are :class:`fractions.Fraction` (always reduced, positive denominator)
and vectors are plain tuples of them. Nothing in this module touches floats.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple of Fraction (ints are accepted wherever a Fraction is)


class DimensionMismatch(ValueError):
    pass


class EmptyInput(ValueError):
    pass


class DomainError(ValueError):
    pass


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected on purpose: a binary float is almost never the
    rational the caller had in mind.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


def vec(xs: Iterable) -> tuple:
    return tuple(Q(x) for x in xs)


def fmt_rational(x) -> str:
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, (str, int)) or isinstance(s, bool):
        raise ValueError(f"expected a rational string, got {s!r}")
    return Q(s)


def fmt_vector(v: Sequence) -> list[str]:
    return [fmt_rational(x) for x in v]


# -- vector arithmetic -------------------------------------------------------

def _check_same(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)} differ")


def add(a: Sequence, b: Sequence) -> tuple:
    _check_same(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> tuple:
    _check_same(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


def dot(a: Sequence, b: Sequence):
    _check_same(a, b)
    return sum((x * y for x, y in zip(a, b)), 0)


def vsum(vectors: Sequence[Sequence], d: int | None = None) -> tuple:
    if not vectors:
        if d is None:
            raise EmptyInput("sum of no vectors needs an explicit dimension")
        return (Fraction(0),) * d
    out = list(vectors[0])
    for v in vectors[1:]:
        _check_same(out, v)
        for i, x in enumerate(v):
            out[i] += x
    return tuple(out)


def zero(d: int) -> tuple:
    return (Fraction(0),) * d


def unit(d: int, i: int) -> tuple:
    return tuple(Fraction(int(j == i)) for j in range(d))


# -- integer helpers ---------------------------------------------------------

def common_denominator(values: Iterable) -> int:
    den = 1
    for x in values:
        q = Fraction(x).denominator
        den = den * q // math.gcd(den, q)
    return den


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def integer_direction(v: Sequence) -> tuple[int, ...]:
    """Primitive integer vector pointing the same way as the rational ``v``."""
    den = common_denominator(v)
    return primitive([int(Fraction(x) * den) for x in v])


# -- elimination -------------------------------------------------------------

def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        den = common_denominator(r)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def _echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) forward elimination.

    Returns the nonzero echelon rows and their pivot columns.
    """
    m = [r[:] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            row = m[i]
            top = m[r]
            for j in range(c, ncols):
                row[j] = (row[j] * piv - f * top[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    n = len(rows[0])
    for row in rows:
        if len(row) != n:
            raise DimensionMismatch("rows of different lengths")
    echelon, _ = _echelon(_integer_rows(rows))
    return len(echelon)


def pivot_columns(rows: Sequence[Sequence]) -> list[int]:
    """Pivot columns of the row space, in increasing order."""
    if not rows:
        return []
    return _echelon(_integer_rows(rows))[1]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """A basis of {x : row . x = 0 for every row}."""
    if ncols is None:
        if not rows:
            raise EmptyInput("ncols needed for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        return [unit(ncols, i) for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def integer_nullvector(rows: Sequence[Sequence[int]], ncols: int) -> tuple[int, ...]:
    """The primitive integer generator of a one-dimensional kernel."""
    basis = nullspace(rows, ncols)
    if len(basis) != 1:
        raise ValueError(f"kernel has dimension {len(basis)}, expected 1")
    return integer_direction(basis[0])


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...]:
    """Solve the square nonsingular system ``a x = b`` exactly."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return tuple(row[n] for row in red)


def independent_subset(vectors: Sequence[Sequence], limit: int | None = None) -> list[int]:
    """Indices of a greedily chosen linearly independent subfamily."""
    basis: list[tuple[int, list[int]]] = []  # (pivot column, row)
    chosen: list[int] = []
    for idx, v in enumerate(vectors):
        row = _integer_rows([v])[0]
        for p, b in basis:
            if row[p] != 0:
                f, g = row[p], b[p]
                row = [x * g - f * y for x, y in zip(row, b)]
        piv = next((j for j, x in enumerate(row) if x != 0), None)
        if piv is None:
            continue
        basis.append((piv, list(primitive(row))))
        chosen.append(idx)
        if limit is not None and len(chosen) >= limit:
            break
    return chosen


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*a)]


def identity(d: int) -> list[list[Fraction]]:
    return [list(unit(d, i)) for i in range(d)]


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(map(Fraction, row)) + list(unit(n, i)) for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


def determinant(a: Sequence[Sequence]):
    n = len(a)
    m = [list(map(Fraction, row)) for row in a]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def apply(matrix: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in matrix)


# -- affine subspaces ----------------------------------------------------------

@dataclass(frozen=True)
class AffineSubspace:
    basepoint: tuple
    direction_basis: tuple  # of linearly independent vectors

    @property
    def dim(self) -> int:
        return len(self.direction_basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.basepoint)

    def contains(self, p: Sequence) -> bool:
        diff = sub(p, self.basepoint)
        return rank(list(self.direction_basis) + [diff]) == self.dim


def affine_hull(points: Sequence[Sequence]) -> AffineSubspace:
    if not points:
        raise EmptyInput("affine hull of no points")
    base = vec(points[0])
    diffs = [sub(vec(p), base) for p in points[1:]]
    keep = independent_subset(diffs, limit=len(base))
    return AffineSubspace(base, tuple(diffs[i] for i in keep))


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull; -1 for no points."""
    if not points:
        return -1
    base = points[0]
    return len(independent_subset([sub(p, base) for p in points[1:]], limit=len(base)))


def project_onto_affine(p: Sequence, a: AffineSubspace) -> tuple:
    """Orthogonal projection of ``p`` onto ``a`` via the normal equations."""
    p = vec(p)
    _check_same(p, a.basepoint)
    if a.dim == 0:
        return a.basepoint
    basis = a.direction_basis
    gram = [[dot(u, v) for v in basis] for u in basis]
    rhs = [dot(u, sub(p, a.basepoint)) for u in basis]
    coeffs = solve(gram, rhs)
    q = a.basepoint
    for c, u in zip(coeffs, basis):
        q = add(q, scale(c, u))
    return q


# -- rational stand-ins for trigonometric constructions ------------------------

def rational_circle_point(t) -> tuple[Fraction, Fraction]:
    """Point of the open upper unit half-circle; the angle grows with ``t``."""
    t = Q(t)
    if t <= 0:
        raise DomainError("t must be positive")
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def cayley(skew: Sequence[Sequence]) -> list[list[Fraction]]:
    """Orthogonal matrix (I - A)(I + A)^-1 of a skew-symmetric ``A``."""
    d = len(skew)
    a = [list(map(Fraction, row)) for row in skew]
    for i in range(d):
        for j in range(d):
            if a[i][j] != -a[j][i]:
                raise ValueError("matrix is not skew-symmetric")
    eye = identity(d)
    minus = [[eye[i][j] - a[i][j] for j in range(d)] for i in range(d)]
    plus = [[eye[i][j] + a[i][j] for j in range(d)] for i in range(d)]
    return mat_mul(minus, inverse(plus))


def random_rational_rotation(d: int, seed: int, max_num: int = 3, max_den: int = 4) -> list[list[Fraction]]:
    if d < 2:
        raise DomainError("rotations need d >= 2")
    rng = random.Random(seed)
    while True:
        a = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                x = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
                a[i][j], a[j][i] = x, -x
        try:
            return cayley(a)
        except ValueError:  # I + A singular; impossible over Q but cheap to guard
            continue


def is_orthogonal(m: Sequence[Sequence]) -> bool:
    return mat_mul(transpose(m), m) == identity(len(m))


# -- exact linear feasibility --------------------------------------------------

def feasible_nonnegative(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Find z >= 0 with ``a z = b``, or None. Phase-one simplex, Bland's rule."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in a[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        rows.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    width = n + m
    basis = [n + i for i in range(m)]
    # objective: minimise the sum of artificials, kept as reduced costs
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for j in range(width + 1):
            cost[j] -= row[j]
    for i in range(m):
        cost[n + i] += 1
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # unbounded direction; cannot happen in phase one
            break
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[leave])]
        basis[leave] = enter
    if cost[-1] != 0:
        return None
    z = [Fraction(0)] * width
    for i, j in enumerate(basis):
        z[j] = rows[i][-1]
    if any(z[n + i] != 0 for i in range(m)):
        return None
    return tuple(z[:n])

"""Verification suites behind ``polysum verify``; each returns a :class:`Report`."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import extremal as ex
from .face_lattice import build_face_lattice, euler_residual
from .nesterov import (closed_form_fvector, nesterov_round, perfectly_centered_witnesses,
                       predicted_rounding_lattice, repeated_round_check, verify_rounding)
from .polytope import cross_polytope, cube, simplex, tetrahedron_pc
from .report import INCONCLUSIVE, SKIPPED, Report


@dataclass
class SuiteConfig:
    dim: int = 3
    seed: int = 0
    size: int = 10  # random instances per randomised suite
    max_combinatorial_dim: int = 8
    rounds: int = 3
    geometric_rounds: int = 2


def _simplex_for(d: int):
    return tetrahedron_pc() if d == 3 else simplex(d)


def rounding_lattice(cfg: SuiteConfig) -> Report:
    rep = Report(f"verify rounding-lattice --dim {cfg.dim}")
    for p in (_simplex_for(cfg.dim), cube(cfg.dim)):
        with rep.timed():
            pc = perfectly_centered_witnesses(p)
            rep.add(f"{p.name}: perfectly centered", pc.overall)
            if not pc.overall:
                continue
            v = verify_rounding(p, pc)
            rep.add(f"{p.name}: faces of P+P* biject onto pairs G<=F", v.bijective)
            rep.add(f"{p.name}: dimension dim G + d-1 - dim F preserved", v.dims_preserved)
            rep.add(f"{p.name}: Hasse covers preserved and reflected", v.order_preserved)
            rep.add(f"{p.name}: facets are exactly F + F^D", v.facets_are_f_plus_dual)
            rep.add(f"{p.name}: f-vector of P+P*", v.fvector == v.predicted_fvector,
                    v.predicted_fvector, v.fvector)
    return rep


def _fvector_suite(kind: str, cfg: SuiteConfig) -> Report:
    rep = Report(f"verify {kind}-fvector --dim {cfg.dim}")
    build = _simplex_for if kind == "simplex" else cube
    with rep.timed():
        p = build(cfg.dim)
        expected = closed_form_fvector(kind, cfg.dim)
        pc = perfectly_centered_witnesses(p).overall
        rep.add(f"{p.name}: perfectly centered", pc)
        f = build_face_lattice(nesterov_round(p).sum).f_vector()
        rep.add(f"{kind} d={cfg.dim}: hull of P+P* against closed form", f == expected, expected, f)
    for d in range(2, cfg.max_combinatorial_dim + 1):
        with rep.timed():
            expected = closed_form_fvector(kind, d)
            counted = predicted_rounding_lattice(build_face_lattice(build(d))).counts_by_dim()
            rep.add(f"{kind} d={d}: pair count against closed form", counted == expected, expected, counted)
            rep.add(f"{kind} d={d}: closed form Euler residual", euler_residual(expected) == 0, 0,
                    euler_residual(expected))
    return rep


def simplex_fvector(cfg: SuiteConfig) -> Report:
    return _fvector_suite("simplex", cfg)


def cube_fvector(cfg: SuiteConfig) -> Report:
    return _fvector_suite("cube", cfg)


def repeated_rounding(cfg: SuiteConfig) -> Report:
    rep = Report(f"verify repeated-rounding --rounds {cfg.rounds}")
    with rep.timed():
        steps = repeated_round_check(tetrahedron_pc(), cfg.rounds, cfg.geometric_rounds)
    for s in steps:
        if s.computed is None:
            rep.add(f"n={s.n}: f-vector", None, s.predicted, None, status=SKIPPED,
                    note="recurrence only, not computed geometrically")
            continue
        rep.add(f"n={s.n}: f-vector against recurrences", s.computed == s.predicted, s.predicted, s.computed)
        rep.add(f"n={s.n}: iterate perfectly centered", bool(s.perfectly_centered))
        rep.add(f"n={s.n}: Euler residual", s.euler_residual == 0, 0, s.euler_residual)
    ratios = [s.ratio for s in steps]
    shrinking = all(a >= b for a, b in zip(ratios, ratios[1:])) and all(r >= 1 for r in ratios)
    rep.add("f2/f0 non-increasing towards 1", shrinking, None, [str(r) for r in ratios])
    return rep


def vertex_bound(cfg: SuiteConfig) -> Report:
    rep = Report("verify vertex-bound")
    cases = [(3, (4, 4)), (3, (5, 6)), (4, (3, 3, 3))]
    if cfg.dim >= 5:
        cases.append((cfg.dim, (3,) * (cfg.dim - 1)))
    for d, counts in cases:
        with rep.timed():
            fam = ex.build_halfcircle_family(d, counts)
            rep.add(f"d={d} counts={counts}: every vertex in its own normal cone", fam.vertex_in_own_cone)
            b = ex.verify_vertex_bound_attained(fam)
            rep.add(f"d={d} counts={counts}: f0(sum) = product", b.attained, b.bound, b.computed)
    return rep


_POOL = ("tetrahedron", "cube", "cross", "random")


def _pool_member(kind: str, seed: int):
    if kind == "tetrahedron":
        return tetrahedron_pc()
    if kind == "cube":
        return cube(3)
    if kind == "cross":
        return cross_polytope(3)
    return ex.random_polytope_3d(seed)


def three_d_relations(cfg: SuiteConfig) -> Report:
    rep = Report(f"verify 3d-relations --seed {cfg.seed} --size {cfg.size}")
    rng = random.Random(cfg.seed)
    for i in range(cfg.size):
        k = 2 if i % 2 == 0 else 3
        kinds = [rng.choice(_POOL) for _ in range(k)]
        summands = [_pool_member(kd, cfg.seed * 1000 + i * 10 + j) for j, kd in enumerate(kinds)]
        label = f"#{i} {'+'.join(kinds)}"
        with rep.timed():
            found = ex.rotate_into_general_position(summands, cfg.seed * 100 + i)
            if found is None:
                rep.add(f"{label}: general position", None, status=INCONCLUSIVE,
                        note="no rotation seed gave general position")
                continue
            r = ex.check_3d_relations(found[0])
            rep.add(f"{label}: residuals", r.residuals == (0, 0, 0), (0, 0, 0), r.residuals)
            rep.add(f"{label}: pure facets = sum f2(P_i)", r.pure == r.pure_formula, r.pure_formula, r.pure)
            rep.add(f"{label}: mixed facets = (f1 - sum f1(P_i))/2", r.mixed == r.mixed_formula,
                    str(r.mixed_formula), r.mixed)
            rep.add(f"{label}: f2 = pure + mixed", r.fvector[2] == r.pure + r.mixed and r.other == 0,
                    r.fvector[2], r.pure + r.mixed)
    with rep.timed():
        r = ex.check_3d_relations([cube(3), cube(3)])
        rep.add("two axis-aligned cubes flagged as not in general position", not r.general_position)
    return rep


def facet_bounds(cfg: SuiteConfig) -> Report:
    rep = Report(f"verify facet-bounds --seed {cfg.seed} --size {cfg.size}")
    rng = random.Random(cfg.seed + 1)
    for i in range(cfg.size):
        kinds = [rng.choice(_POOL) for _ in range(2)]
        p1, p2 = (_pool_member(kd, cfg.seed * 1000 + i * 10 + j) for j, kd in enumerate(kinds))
        with rep.timed():
            b = ex.facet_edge_bounds_3d(p1, p2)
            rep.add(f"#{i} {'+'.join(kinds)}: f2 and f1 within bounds", b.holds,
                    (b.facet_bound, b.edge_bound), (b.fvector[2], b.fvector[1]))
    with rep.timed():
        fb, eb = ex.facet_edge_bound_values(4, 4)
        hit = ex.search_facet_bound_witness(4, 4)
        if hit is None:
            rep.add("f0=(4,4): attainment", None, (fb, eb), None, status=INCONCLUSIVE,
                    note="no witness in the perturbation grid")
        else:
            b = hit[2]
            rep.add("f0=(4,4): attainment by lifted half-circle tetrahedra", b.attained,
                    (fb, eb), (b.fvector[2], b.fvector[1]))
    return rep


def cyclic_bounds(cfg: SuiteConfig) -> Report:
    rep = Report(f"verify cyclic-bounds --dim {cfg.dim}")
    cases = [(4, (5, 6)), (4, (7,))]
    if cfg.dim >= 6:
        cases.append((cfg.dim, (4, 4)))
    for d, counts in cases:
        with rep.timed():
            fam = ex.build_cyclic_family(d, counts)
            for k in ex.attainable_range(d, len(counts)):
                b = ex.verify_kface_bound_attained(fam, k)
                rep.add(f"d={d} counts={counts} k={k}: f_k(sum) = trivial bound", b.attained, b.bound, b.computed)
            for p in fam:
                rep.add(f"d={d} {p.n_vertices}-vertex cyclic polytope neighbourly",
                        not ex.neighbourly_failures(p))
    return rep


SUITES = {
    "rounding-lattice": rounding_lattice,
    "simplex-fvector": simplex_fvector,
    "cube-fvector": cube_fvector,
    "repeated-rounding": repeated_rounding,
    "vertex-bound": vertex_bound,
    "3d-relations": three_d_relations,
    "facet-bounds": facet_bounds,
    "cyclic-bounds": cyclic_bounds,
}


def run_suite(name: str, cfg: SuiteConfig) -> Report:
    if name == "all":
        rep = Report(f"verify all --dim {cfg.dim} --seed {cfg.seed} --size {cfg.size}")
        for fn in SUITES.values():
            sub = fn(cfg)
            for c in sub.checks:
                c.name = f"[{sub.command.split()[1]}] {c.name}"
            rep.extend(sub)
        return rep
    return SUITES[name](cfg)


__all__ = ["SUITES", "SuiteConfig", "run_suite"]

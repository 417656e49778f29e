"""Command line: ``polysum <command> ...``.

Exit status is 0 when every check passes, 1 when one fails and 2 for usage or
input errors (bad files, mismatched dimensions, uncentred input to ``dual``).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import core_math as cm
from . import io
from .face_lattice import build_face_lattice, euler_residual, lattice_dot, lattice_text
from .minkowski import minkowski_sum, relatively_in_general_position, trivial_kface_bound, trivial_vertex_bound
from .nesterov import NotFullDimensional, nesterov_round, perfectly_centered_witnesses
from .polytope import KINDS, InvalidConstruction, NotCentered, construct, polar_dual
from .report import SKIPPED, Report
from .suites import SUITES, SuiteConfig, run_suite


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def _rationals(text: str) -> list:
    try:
        return [cm.parse_rational(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected comma separated rationals, got {text!r}") from None


def _emit(rep: Report, args) -> int:
    out = rep.records(args.timing) if args.format == "records" else rep.text(args.timing)
    sys.stdout.write(out)
    return rep.exit_code


def _fvec_info(rep: Report, label: str, p, lattice=None):
    lattice = lattice or build_face_lattice(p)
    f = lattice.f_vector()
    rep.note(f"{label} f-vector", f)
    return lattice, f


# -- subcommands ---------------------------------------------------------------------

def cmd_make(args) -> int:
    params = {}
    if args.dim is not None:
        params["dim"] = args.dim
    if args.t is not None:
        params["t"] = _rationals(args.t)
    if args.axis is not None:
        params["axis"] = args.axis
    for key in ("a", "b", "lower", "upper"):
        if getattr(args, key) is not None:
            params[key] = _rationals(getattr(args, key))
    if args.points is not None:
        params["points"] = [_rationals(row) for row in args.points.split(";") if row.strip()]
    try:
        p = construct(args.kind, **params)
    except KeyError as e:
        raise UsageError(f"{args.kind} needs --{e.args[0]}") from None
    io.save_polytope(p, args.output)
    rep = Report(f"make {args.kind}")
    _fvec_info(rep, p.name or args.kind, p)
    rep.note("written", args.output)
    return _emit(rep, args)


def cmd_sum(args) -> int:
    summands = [q for path in args.files for q in io.load_any(path)]
    dims = {p.ambient_dim for p in summands}
    if len(dims) != 1:
        raise UsageError(f"summands live in different dimensions: {sorted(dims)}")
    ctx = minkowski_sum(summands, name="sum")
    rep = Report("sum " + " ".join(args.files))
    for i, p in enumerate(summands):
        _fvec_info(rep, f"summand {i} ({p.name})", p)
    _, f = _fvec_info(rep, "sum", ctx.sum)
    gp, bad = relatively_in_general_position(ctx)
    rep.note("relatively in general position", gp)
    f0s = [p.n_vertices for p in summands]
    rep.add("f0 <= product of summand f0", f[0] <= trivial_vertex_bound(f0s), trivial_vertex_bound(f0s), f[0])
    for k in range(len(f)):
        b = trivial_kface_bound(f0s, k)
        rep.add(f"f{k} <= trivial k-face bound", f[k] <= b, b, f[k])
    if args.output:
        io.save_polytope(ctx.sum, args.output)
        rep.note("written", args.output)
    return _emit(rep, args)


def cmd_dual(args) -> int:
    p = io.load_polytope(args.file)
    d = polar_dual(p)
    io.save_polytope(d, args.output)
    rep = Report(f"dual {args.file}")
    _fvec_info(rep, "input", p)
    _fvec_info(rep, "dual", d)
    rep.note("written", args.output)
    return _emit(rep, args)


def cmd_round(args) -> int:
    p = io.load_polytope(args.file)
    rep = Report(f"round {args.file} -n {args.n}")
    current = p
    for i in range(1, args.n + 1):
        current = nesterov_round(current).sum
        lat, f = _fvec_info(rep, f"round {i}", current)
        rep.add(f"round {i}: Euler residual", euler_residual(f) == 0, 0, euler_residual(f))
    io.save_polytope(current, args.output)
    rep.note("written", args.output)
    return _emit(rep, args)


def cmd_analyze(args) -> int:
    p = io.load_polytope(args.file)
    rep = Report(f"analyze {args.file}")
    lat, f = _fvec_info(rep, p.name or "input", p)
    rep.note("dimension", p.intrinsic_dim)
    rep.add("Euler residual", euler_residual(f) == 0, 0, euler_residual(f))
    if args.off:
        try:
            Path(args.off).write_text(io.to_off(p, lat))
            rep.note("OFF written", args.off)
        except ValueError as e:
            rep.add("OFF export", None, note=str(e), status=SKIPPED)
    code = _emit(rep, args)
    if args.lattice == "dot":
        sys.stdout.write(lattice_dot(lat))
    elif args.lattice == "txt":
        sys.stdout.write(lattice_text(lat))
    return code


def cmd_check_pc(args) -> int:
    p = io.load_polytope(args.file)
    rep = Report(f"check-pc {args.file}")
    pc = perfectly_centered_witnesses(p)
    rep.add("centered", pc.centered)
    lat = build_face_lattice(p)
    for face in lat.nontrivial():
        m = pc.witnesses.get(face.vertex_set)
        label = f"dim {face.dim} face {sorted(face.vertex_set)}"
        if m is None:
            rep.add(label, False, note=pc.failures[face.vertex_set])
        elif args.verbose:
            rep.add(label, True, computed=cm.fmt_vector(m))
    rep.add("perfectly centered", pc.overall)
    return _emit(rep, args)


def cmd_verify(args) -> int:
    cfg = SuiteConfig(dim=args.dim, seed=args.seed, size=args.size)
    if args.max_dim is not None:
        cfg.max_combinatorial_dim = args.max_dim
    if cfg.dim < 2:
        raise UsageError("--dim must be at least 2")
    return _emit(run_suite(args.suite, cfg), args)


def cmd_bounds(args) -> int:
    f0s = _ints(args.f0)
    if not f0s or any(n < 1 for n in f0s):
        raise UsageError("--f0 needs positive vertex counts")
    rep = Report(f"bounds --f0 {args.f0}" + (f" --k {args.k}" if args.k is not None else ""))
    rep.note("vertex bound", trivial_vertex_bound(f0s))
    if args.k is not None:
        rep.note(f"{args.k}-face bound", trivial_kface_bound(f0s, args.k))
    return _emit(rep, args)


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polysum", description="Exact Minkowski sums, polar duals and face lattices.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--timing", action="store_true", help="append wall time to each check")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("make", parents=[common], help="build a standard polytope")
    s.add_argument("kind", choices=KINDS + ("tetrahedron_pc", "polygon_halfcircle", "from_points"))
    s.add_argument("--dim", type=int)
    s.add_argument("--t", help="comma separated parameters, e.g. 1,2,3/2")
    s.add_argument("--axis", type=int)
    s.add_argument("--a")
    s.add_argument("--b")
    s.add_argument("--lower")
    s.add_argument("--upper")
    s.add_argument("--points", help="semicolon separated points, e.g. '0,0;1,0;0,1'")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_make)

    s = sub.add_parser("sum", parents=[common], help="Minkowski sum of polytope files or manifests")
    s.add_argument("files", nargs="+")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("dual", parents=[common], help="polar dual of a centered polytope")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("round", parents=[common], help="P + P*, repeated n times")
    s.add_argument("file")
    s.add_argument("-n", type=int, default=1)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_round)

    s = sub.add_parser("analyze", parents=[common], help="f-vector, lattice and OFF export")
    s.add_argument("file")
    s.add_argument("--lattice", choices=("dot", "txt"))
    s.add_argument("--off")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("check-pc", parents=[common], help="perfect centering test")
    s.add_argument("file")
    s.add_argument("-v", "--verbose", action="store_true", help="list the witness of every face")
    s.set_defaults(func=cmd_check_pc)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=tuple(SUITES) + ("all",))
    s.add_argument("--dim", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--size", type=int, default=10)
    s.add_argument("--max-dim", type=int, help="largest dimension of the combinatorial f-vector checks")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bounds", parents=[common], help="trivial vertex and k-face bounds")
    s.add_argument("--f0", required=True)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_bounds)
    return ap


_INPUT_ERRORS = (UsageError, io.PolytopeFileError, FileNotFoundError, IsADirectoryError, InvalidConstruction,
                 NotCentered, NotFullDimensional, cm.DimensionMismatch, cm.EmptyInput, cm.DomainError)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as e:
        print(f"polysum {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

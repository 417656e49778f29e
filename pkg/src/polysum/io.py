"""Polytope files (JSON with exact rational strings), family manifests and OFF export."""

from __future__ import annotations

import json
from pathlib import Path

from . import core_math as cm
from .face_lattice import FaceLattice, boundary_order, build_face_lattice
from .polytope import Polytope, convex_hull


class PolytopeFileError(ValueError):
    pass


def to_record(p: Polytope) -> dict:
    return {
        "name": p.name,
        "ambient_dim": p.ambient_dim,
        "vertices": [cm.fmt_vector(v) for v in p.vertices],
    }


def from_record(rec: dict, source: str = "<record>") -> Polytope:
    """Rebuild a polytope; the H-representation is always recomputed."""
    if not isinstance(rec, dict):
        raise PolytopeFileError(f"{source}: expected an object")
    try:
        d = rec["ambient_dim"]
        raw = rec["vertices"]
    except KeyError as e:
        raise PolytopeFileError(f"{source}: missing field {e.args[0]!r}") from None
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise PolytopeFileError(f"{source}: ambient_dim must be a positive integer")
    if not isinstance(raw, list) or not raw:
        raise PolytopeFileError(f"{source}: vertices must be a nonempty array")
    pts = []
    for k, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != d:
            raise PolytopeFileError(f"{source}: vertex {k} does not have {d} coordinates")
        try:
            pts.append(tuple(cm.parse_rational(x) for x in row))
        except (ValueError, ZeroDivisionError, TypeError) as e:
            raise PolytopeFileError(f"{source}: vertex {k}: {e}") from None
    return convex_hull(pts, d, name=str(rec.get("name", "")))


def dumps(p: Polytope) -> str:
    return json.dumps(to_record(p), indent=1) + "\n"


def _load_json(path) -> object:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise PolytopeFileError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None


def save_polytope(p: Polytope, path) -> None:
    Path(path).write_text(dumps(p))


def load_polytope(path) -> Polytope:
    data = _load_json(path)
    if isinstance(data, dict) and "summands" in data:
        raise PolytopeFileError(f"{path}: this is a family manifest, not a single polytope")
    return from_record(data, str(path))


def save_family(polytopes, path, name: str = "") -> None:
    rec = {"name": name, "summands": [to_record(p) for p in polytopes]}
    Path(path).write_text(json.dumps(rec, indent=1) + "\n")


def load_family(path) -> list[Polytope]:
    data = _load_json(path)
    if not isinstance(data, dict) or not isinstance(data.get("summands"), list):
        raise PolytopeFileError(f"{path}: expected an object with a 'summands' array")
    return [from_record(r, f"{path} summand {i}") for i, r in enumerate(data["summands"])]


def load_any(path) -> list[Polytope]:
    """A single polytope file or a family manifest, as a list of polytopes."""
    data = _load_json(path)
    if isinstance(data, dict) and "summands" in data:
        return load_family(path)
    return [from_record(data, str(path))]


def to_off(p: Polytope, lattice: FaceLattice | None = None) -> str:
    """OFF text for a 3-polytope; decimal coordinates are for display only."""
    if p.ambient_dim != 3 or p.intrinsic_dim != 3:
        raise ValueError("OFF export is for full-dimensional 3-polytopes")
    lattice = lattice or build_face_lattice(p)
    facets = lattice.by_dim(2)
    lines = [
        "OFF",
        "# coordinates are decimal renderings of exact rationals",
        f"{p.n_vertices} {len(facets)} {len(lattice.by_dim(1))}",
    ]
    for v in p.vertices:
        lines.append(" ".join(f"{float(x):.12g}" for x in v))
    for f in facets:
        order = boundary_order(p, lattice, f)
        lines.append(f"{len(order)} " + " ".join(str(i) for i in order))
    return "\n".join(lines) + "\n"

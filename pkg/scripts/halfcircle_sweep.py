"""Sweep half-circle families and report f0 of the sum against the product bound."""

import argparse
import itertools

from polysum import extremal as ex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-count", type=int, default=6)
    ap.add_argument("--dims", type=int, nargs="+", default=[3, 4])
    args = ap.parse_args()
    bad = 0
    for d in args.dims:
        for counts in itertools.combinations_with_replacement(range(1, args.max_count + 1), d - 1):
            if d > 3 and max(counts) > 4:
                continue  # keeps the 4D sweep to a few seconds
            fam = ex.build_halfcircle_family(d, counts)
            b = ex.verify_vertex_bound_attained(fam)
            ok = b.attained and fam.vertex_in_own_cone
            bad += not ok
            print(f"d={d} counts={counts}: f0={b.computed} bound={b.bound} {'ok' if ok else 'MISS'}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

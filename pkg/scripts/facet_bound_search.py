"""Search for two simplicial 3-polytopes whose sum meets the facet and edge bounds."""

import argparse

from polysum import core_math as cm
from polysum import extremal as ex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n1", type=int, default=4)
    ap.add_argument("--n2", type=int, default=4)
    args = ap.parse_args()
    fb, eb = ex.facet_edge_bound_values(args.n1, args.n2)
    print(f"f0=({args.n1},{args.n2}): f2 <= {fb}, f1 <= {eb}")
    hit = ex.search_facet_bound_witness(args.n1, args.n2)
    if hit is None:
        print("INCONCLUSIVE: no witness in the perturbation grid")
        return 0
    p1, p2, rep = hit
    for label, p in (("P1", p1), ("P2", p2)):
        print(label)
        for v in p.vertices:
            print("  ", " ".join(cm.fmt_vector(v)))
    print("sum f-vector:", rep.fvector, "attained" if rep.attained else "not attained")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

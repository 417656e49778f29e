"""f-vectors of repeated rounding of the tetrahedron, by recurrence and by hull."""

import argparse
import time
from dataclasses import dataclass

from polysum.nesterov import repeated_fvector, repeated_round_check
from polysum.polytope import tetrahedron_pc


@dataclass
class Config:
    rounds: int = 6
    geometric: int = 2  # iterates actually built; the third takes ~10 s


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rounds", type=int, default=Config.rounds)
    ap.add_argument("--geometric", type=int, default=Config.geometric)
    cfg = Config(**vars(ap.parse_args()))
    t0 = time.perf_counter()
    steps = repeated_round_check(tetrahedron_pc(), cfg.geometric, cfg.geometric)
    built = {s.n: s for s in steps}
    f1 = steps[0].computed
    print(f"{'n':>3} {'f0':>8} {'f1':>8} {'f2':>8} {'f2/f0':>10}  hull")
    for n in range(1, cfg.rounds + 1):
        f = repeated_fvector(f1, n)
        s = built.get(n)
        hull = "-" if s is None else ("agrees" if s.computed == f and s.perfectly_centered else f"differs {s.computed}")
        print(f"{n:>3} {f[0]:>8} {f[1]:>8} {f[2]:>8} {f[2] / f[0]:>10.6f}  {hull}")
    print(f"# {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

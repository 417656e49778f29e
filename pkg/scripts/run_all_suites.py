"""Run every verification suite and write the reports to a directory.

    python3 scripts/run_all_suites.py --out results --seed 7
"""

import argparse
from dataclasses import asdict, dataclass
from pathlib import Path

from polysum.suites import SUITES, SuiteConfig, run_suite


@dataclass
class Config:
    out: str = "results"
    dim: int = 3
    seed: int = 0
    size: int = 10
    max_dim: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for k, v in asdict(Config()).items():
        ap.add_argument(f"--{k.replace('_', '-')}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    suite_cfg = SuiteConfig(dim=cfg.dim, seed=cfg.seed, size=cfg.size, max_combinatorial_dim=cfg.max_dim)
    failed = []
    for name in SUITES:
        rep = run_suite(name, suite_cfg)
        (out / f"{name}.txt").write_text(rep.text(timing=True))
        (out / f"{name}.jsonl").write_text(rep.records(timing=True))
        counts = {s: sum(c.status == s for c in rep.checks) for s in ("PASS", "FAIL", "INCONCLUSIVE", "SKIPPED")}
        print(f"{name:<18} " + " ".join(f"{k.lower()}={v}" for k, v in counts.items()))
        if rep.failed:
            failed.append(name)
    print("failed suites:", ", ".join(failed) if failed else "none")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())

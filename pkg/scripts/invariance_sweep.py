"""Apply random integer changes of variables to catalog ideals and compare fingerprints.

    python3 scripts/invariance_sweep.py --trials 20 --label P4/I_6
"""

import argparse
import random
import time
from dataclasses import dataclass, field

from gastruct.artinian import build_algebra, fingerprint, linear_substitution, substitute_ideal
from gastruct.catalog import catalog_entries, random_invertible_matrix


@dataclass
class SweepConfig:
    trials: int = 20
    seed: int = 0
    bound: int = 3
    labels: list = field(default_factory=list)


def main(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    entries = [e for e in catalog_entries() if not cfg.labels or e.label in cfg.labels]
    total_bad = 0
    for e in entries:
        t = time.perf_counter()
        fp = fingerprint(e.algebra())
        bad = 0
        for _ in range(cfg.trials):
            A = random_invertible_matrix(e.n, rng, cfg.bound)
            if fingerprint(build_algebra(substitute_ideal(e.ideal, linear_substitution(A)))) != fp:
                bad += 1
        total_bad += bad
        print(f"{e.label:28s} {cfg.trials - bad}/{cfg.trials} preserved  {time.perf_counter() - t:.2f} s")
    print(f"mismatches: {total_bad}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--label", action="append", default=[])
    a = ap.parse_args()
    main(SweepConfig(a.trials, a.seed, a.bound, a.label))

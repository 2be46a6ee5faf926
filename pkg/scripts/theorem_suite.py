"""Randomized check that projection strength equals GWLP strength.

    python scripts/theorem_suite.py --abelian 1000 --s3 200 --seed 3
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from oachar.gwlp import parseval_residual, verify_projection_lemma_all, verify_theorem
from oachar.randomized import abelian_suite, s3_suite


@dataclass
class SuiteConfig:
    abelian: int = 200
    s3: int = 50
    seed: int = 20240101
    tol: float = 1e-7
    lemma: bool = False


def run(cfg: SuiteConfig) -> int:
    t0 = time.perf_counter()
    designs = abelian_suite(cfg.abelian, cfg.seed) + s3_suite(cfg.s3, cfg.seed + 1)
    by_strength = Counter()
    failures = []
    worst_parseval = worst_lemma = 0.0
    for i, d in enumerate(designs):
        v = verify_theorem(d, tol=cfg.tol)
        by_strength[(v.oracle, "abelian" if d.group.is_abelian else "S3")] += 1
        worst_parseval = max(worst_parseval, parseval_residual(d, v.report))
        if cfg.lemma:
            worst_lemma = max([worst_lemma] + [r.max_residual for r in verify_projection_lemma_all(d)])
        if not v.agree:
            failures.append((i, d.group.name, v.oracle, v.gwlp, v.mu))
    elapsed = time.perf_counter() - t0
    print(f"{len(designs)} designs in {elapsed:.1f}s")
    print("strength  family   count")
    for (t, fam), n in sorted(by_strength.items()):
        print(f"{t:>8}  {fam:<7} {n:>5}")
    print(f"max Parseval relative error {worst_parseval:.2e}")
    if cfg.lemma:
        print(f"max projection-identity residual {worst_lemma:.2e}")
    for f in failures:
        print("DISAGREE", f)
    print("all agree" if not failures else f"{len(failures)} disagreements")
    return 1 if failures else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--abelian", type=int, default=SuiteConfig.abelian)
    p.add_argument("--s3", type=int, default=SuiteConfig.s3)
    p.add_argument("--seed", type=int, default=SuiteConfig.seed)
    p.add_argument("--tol", type=float, default=SuiteConfig.tol)
    p.add_argument("--lemma", action="store_true", help="also check projected inner products")
    raise SystemExit(run(SuiteConfig(**vars(p.parse_args()))))

"""Timing harness for the reduction kernels and the pair pipeline.

Reports wall time per operation over seeded random inputs, e.g.

    python3 scripts/benchmark.py --ring int --trials 200
    python3 scripts/benchmark.py --ring polyq --trials 30 --max-dim 4
"""

import argparse
import random
import time
from dataclasses import dataclass

from pidpairs import INTEGERS, RATIONAL_POLYNOMIALS, canonical_pair, hnf, snf
from pidpairs.selftest import random_canonical_instance, random_matrix

RINGS = {"int": INTEGERS, "polyq": RATIONAL_POLYNOMIALS}


@dataclass(frozen=True)
class BenchConfig:
    ring_tag: str = "int"
    trials: int = 100
    max_dim: int = 5
    max_entry: int = 10
    seed: int = 0


def bench(name, fn, inputs):
    start = time.perf_counter()
    for item in inputs:
        fn(item)
    elapsed = time.perf_counter() - start
    per = elapsed / max(len(inputs), 1)
    print(f"{name:18s} {len(inputs):5d} calls  {elapsed:8.3f}s total  {per * 1e3:9.3f}ms each")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ring", choices=sorted(RINGS), default="int")
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--max-dim", type=int, default=5)
    parser.add_argument("--max-entry", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    config = BenchConfig(args.ring, args.trials, args.max_dim, args.max_entry, args.seed)

    ring = RINGS[config.ring_tag]
    rng = random.Random(config.seed)
    mats = [
        random_matrix(
            ring,
            rng,
            rng.randint(1, config.max_dim),
            rng.randint(1, config.max_dim),
            config.max_entry,
        )
        for _ in range(config.trials)
    ]
    insts = [
        random_canonical_instance(ring, rng, config.max_dim)
        for _ in range(config.trials)
    ]

    print(f"ring={config.ring_tag} trials={config.trials} "
          f"max_dim={config.max_dim} seed={config.seed}")
    bench("hnf", hnf, mats)
    bench("snf", snf, mats)
    bench("canonical_pair", lambda i: canonical_pair(i.X1, i.X2), insts)


if __name__ == "__main__":
    main()

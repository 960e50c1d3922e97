"""Check that powers of random R-diagonal elements are R-diagonal, with timings.

For each r and seed, draws a random spec of the given order and checks
that a^r has vanishing non-alternating cumulants and the *-distribution
of a product of r free copies of a.

    python scripts/power_rdiag.py --powers 2 3 --order 12 --seeds 0 1
"""
import argparse
import random
import time
from dataclasses import dataclass, field

from freecumulants.free import verify_power_rdiag
from freecumulants.verify import random_spec


@dataclass
class PowerConfig:
    powers: list[int] = field(default_factory=lambda: [2, 3])
    order: int = 12
    seeds: list[int] = field(default_factory=lambda: [0])


def parse_args() -> PowerConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--powers", type=int, nargs="+", default=[2, 3])
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--seeds", type=int, nargs="+", default=[0])
    a = p.parse_args()
    return PowerConfig(a.powers, a.order, a.seeds)


def main():
    cfg = parse_args()
    ok = True
    print(f"{'r':>3} {'seed':>5} {'words':>6} {'result':>7} {'seconds':>8}")
    for r in cfg.powers:
        order = cfg.order - cfg.order % r
        for seed in cfg.seeds:
            spec = random_spec(random.Random(f"power:{seed}"), order)
            t0 = time.perf_counter()
            passed = verify_power_rdiag(spec, r, order)
            dt = time.perf_counter() - t0
            ok &= passed
            print(f"{r:>3} {seed:>5} {'<=' + str(order // r):>6} {'PASS' if passed else 'FAIL':>7} {dt:>8.2f}")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()

"""Tabulate |NC(n)|, enumeration time, and the Moebius values mu(pi, 1_n).

    python scripts/tabulate_nc.py --max-n 12
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from freecumulants.partitions import catalan, iter_nc, kreweras, moebius_to_top


@dataclass
class TableConfig:
    max_n: int = 12
    check_kreweras: bool = True


def parse_args() -> TableConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--no-kreweras", action="store_true", help="skip the block-count check")
    a = p.parse_args()
    return TableConfig(a.max_n, not a.no_kreweras)


def main():
    cfg = parse_args()
    print(f"{'n':>3} {'|NC(n)|':>9} {'catalan':>9} {'seconds':>8}  distinct mu(pi, 1_n)")
    for n in range(1, cfg.max_n + 1):
        t0 = time.perf_counter()
        count = 0
        mus: Counter = Counter()
        for p in iter_nc(n):
            count += 1
            mus[moebius_to_top(p)] += 1
            if cfg.check_kreweras:
                assert len(p.blocks) + len(kreweras(p).blocks) == n + 1
        dt = time.perf_counter() - t0
        assert count == catalan(n)
        top = ", ".join(f"{m}x{c}" for m, c in sorted(mus.items())[:4])
        print(f"{n:>3} {count:>9} {catalan(n):>9} {dt:>8.2f}  {top}{' ...' if len(mus) > 4 else ''}")


if __name__ == "__main__":
    main()

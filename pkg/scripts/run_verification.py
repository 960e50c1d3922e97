"""Run the verification suites and write a JSON report.

    python scripts/run_verification.py --max-n 5 --seeds 0 1 2 --out results/verify.json
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from freecumulants.verify import SUITES, run_suites


@dataclass
class VerifyConfig:
    suites: list[str] = field(default_factory=lambda: list(SUITES))
    max_n: int = 5
    seeds: list[int] = field(default_factory=lambda: [0])
    out: str | None = None


def parse_args() -> VerifyConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--suites", nargs="+", choices=list(SUITES), default=list(SUITES))
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seeds", type=int, nargs="+", default=[0])
    p.add_argument("--out")
    a = p.parse_args()
    return VerifyConfig(a.suites, a.max_n, a.seeds, a.out)


def main():
    cfg = parse_args()
    runs = []
    failed = 0
    for seed in cfg.seeds:
        t0 = time.perf_counter()
        results = run_suites(cfg.suites, cfg.max_n, seed)
        elapsed = time.perf_counter() - t0
        bad = [c.name for _, c in results if not c.passed]
        failed += len(bad)
        print(f"seed {seed}: {len(results) - len(bad)}/{len(results)} passed in {elapsed:.1f}s")
        for name in bad:
            print(f"  FAIL {name}")
        runs.append({
            "seed": seed,
            "seconds": round(elapsed, 3),
            "checks": [{"suite": s, "name": c.name, "passed": c.passed} for s, c in results],
        })
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text(json.dumps({"config": asdict(cfg), "runs": runs}, indent=2) + "\n")
        print(f"wrote {cfg.out}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()

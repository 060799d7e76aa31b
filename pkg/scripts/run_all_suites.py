"""Run every verification suite at its default order and tabulate the outcome.

    python3 scripts/run_all_suites.py --out reports/ --workers 2
"""
import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from qpl.suites import SUITES, Summary, run_suite


@dataclass
class Config:
    out: Path | None = None
    seed: int = 0
    workers: int = 1


def run(cfg: Config) -> int:
    if cfg.out:
        cfg.out.mkdir(parents=True, exist_ok=True)
    worst = 0
    print(f"{'suite':30s} {'inst':>6s} {'cases':>7s} {'fail':>5s} {'skip':>5s} {'sec':>6s}")
    for name in SUITES:
        t0 = time.perf_counter()
        sink = open(cfg.out / f"{name}.jsonl", "w") if cfg.out else None
        for item in run_suite(name, seed=cfg.seed, workers=cfg.workers):
            if sink:
                sink.write(item.to_json() + "\n")
        if sink:
            sink.close()
        s: Summary = item
        worst = max(worst, s.exit_status)
        tag = " (probe)" if s.probe else ""
        print(f"{name:30s} {s.instances:6d} {s.cases:7d} {s.failures:5d} {s.skipped:5d} "
              f"{time.perf_counter() - t0:6.1f}{tag}")
        if s.failures and not s.probe:
            print(f"  first failure: {s.first_failure}")
    return worst


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, help="directory for per-suite JSONL reports")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    a = ap.parse_args()
    raise SystemExit(run(Config(a.out, a.seed, a.workers)))


if __name__ == "__main__":
    main()

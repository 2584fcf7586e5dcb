"""Run the verification suites at a chosen budget and write a JSON report.

    python3 scripts/run_sweeps.py --max-nu 8 --workers 4 --out sweeps.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from lrpictures.verify import run_bijection, run_counts, run_order_independence, run_theorem36


@dataclass
class SweepConfig:
    max_nu: int = 8
    max_rows: int = 4
    bijection_nu: int = 7
    pair_limit: int = 4
    max_mu: int = 5
    independence_nu: int = 7
    max_entry: int = 3
    max_size: int = 4
    workers: int = 1


def run(cfg: SweepConfig):
    plan = [
        ("counts", lambda: run_counts(cfg.max_nu, cfg.max_rows, cfg.workers)),
        ("bijection", lambda: run_bijection(cfg.bijection_nu, None, cfg.pair_limit, cfg.workers)),
        ("order-independence", lambda: run_order_independence(cfg.max_mu, cfg.independence_nu, cfg.workers)),
        ("theorem36", lambda: run_theorem36(cfg.max_entry, cfg.max_size, cfg.workers)),
    ]
    results = []
    for name, fn in plan:
        t0 = time.perf_counter()
        report = fn()
        dt = time.perf_counter() - t0
        s = report.summary
        print(f"{name:20s} {s['pass']:6d} passed {s['fail']:4d} failed  {dt:6.1f}s")
        results.append({"seconds": round(dt, 3), **report.to_json()})
    return results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    for field, value in asdict(defaults).items():
        ap.add_argument("--" + field.replace("_", "-"), type=int, default=value)
    ap.add_argument("--out", help="write the full JSON reports here")
    args = vars(ap.parse_args())
    out = args.pop("out")
    cfg = SweepConfig(**args)
    results = run(cfg)
    if out:
        with open(out, "w") as fh:
            json.dump({"config": asdict(cfg), "reports": results}, fh, indent=1)
    return 0 if all(r["summary"]["fail"] == 0 for r in results) else 1


if __name__ == "__main__":
    raise SystemExit(main())

"""Minimum of R_2(a; b, c) over a range of a, optionally with the exhaustive scan."""

import argparse
import time

from dedekind_lab.sweep import SweepConfig, run_sweep


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--a-max", type=int, default=35)
    p.add_argument("--exhaustive", type=int, default=3, metavar="K")
    p.add_argument("--workers", type=int, default=None)
    args = p.parse_args()
    cfg = SweepConfig(
        mode="r2", a_lo=3, a_hi=args.a_max, exhaustive=args.exhaustive,
        workers=SweepConfig.resolve_workers(args.workers),
    )
    t0 = time.perf_counter()
    res = run_sweep(cfg)
    for row in res.rows:
        print(*row, sep=",")
    print(f"# min R_2^2 = {res.summary['min_sq']} (~{res.summary['approx']}) at {res.summary['witness']}")
    print(f"# counterexample below 3/4: {res.counterexample}; {time.perf_counter() - t0:.1f}s")
    return 3 if res.counterexample else 0


if __name__ == "__main__":
    raise SystemExit(main())

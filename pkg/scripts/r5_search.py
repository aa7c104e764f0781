"""Smallest R_5(a; b) per a over 5-subsets of {2, ..., min(a-1, b_max)}."""

import argparse

from dedekind_lab.sweep import SweepConfig, run_sweep


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--a-lo", type=int, default=7)
    p.add_argument("--a-hi", type=int, default=16)
    p.add_argument("--b-max", type=int, default=12)
    p.add_argument("--workers", type=int, default=None)
    args = p.parse_args()
    cfg = SweepConfig(mode="r5", a_lo=args.a_lo, a_hi=args.a_hi, b_max=args.b_max,
                      workers=SweepConfig.resolve_workers(args.workers))
    res = run_sweep(cfg)
    for row in res.rows:
        print(*row, sep=",")
    print(f"# overall min R_5 = {res.summary['min_R5']} at {res.summary['witness']}")


if __name__ == "__main__":
    main()

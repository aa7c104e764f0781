"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 counterexample to the
R_2 >= sqrt(3)/2 conjecture found by a sweep.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import render
from .bounds import PUBLISHED_TABLE_ROWS, bounds_report
from .core import dedekind_sum, floor_product_sum, generalized_sum
from .errors import DomainError
from .frequency import (
    compare_tables,
    freq1d_appendix,
    freq1d_direct,
    freq2d_appendix,
    freq2d_direct,
)
from .geometry import limit_ratio, min_ratio, ratio2
from .highdim import S5_TABLE_ROWS, ratio_d, split_recipe, symmetric_recipe, upper_bound
from .sweep import MODES, SweepConfig, run_sweep

EXIT_DOMAIN, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 1, 2, 3

R2_TABLE_ROWS = ((11, 7), (21, 5), (18, 11), (73, 39), (99, 33))
BOUNDS_HEADER = ("a", "b", "exact", "flb1", "flb2", "rlb", "fub", "rub")


class Output:
    """Collects one table (header, rows, summary) and renders it as CSV or JSON."""

    def __init__(self, header=None, rows=(), summary=None, text=None):
        self.header = header
        self.rows = list(rows)
        self.summary = summary or {}
        self.text = text

    def render(self, fmt: str) -> str:
        if fmt == "json":
            if self.header:
                rows = [dict(zip(self.header, map(str, r))) for r in self.rows]
            else:
                rows = [list(map(str, r)) for r in self.rows]
            doc = {"rows": rows}
            if self.summary:
                doc["summary"] = self.summary
            if self.text is not None:
                doc["text"] = self.text
            return json.dumps(doc, indent=2) + "\n"
        buf = io.StringIO()
        if self.text is not None:
            buf.write(self.text if self.text.endswith("\n") else self.text + "\n")
        w = csv.writer(buf, lineterminator="\n")
        if self.header:
            w.writerow(self.header)
        w.writerows(self.rows)
        for k, v in self.summary.items():
            buf.write(f"# {k}: {v}\n")
        return buf.getvalue()


def _value(x, args, sig: int = 7) -> str:
    if args.exact:
        return render.exact(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    if args.precision is not None:
        return render.fixed(x, args.precision)
    return render.significant(x, sig)


def cmd_sum(args) -> Output:
    if args.classical:
        a, b = args.classical
        return Output(rows=[[_value(dedekind_sum(a, b), args)]])
    a, *bs = args.general
    if not bs:
        raise DomainError("--general needs a and at least one b")
    if args.scaled:
        return Output(rows=[[floor_product_sum(a, bs)]])
    return Output(rows=[[_value(generalized_sum(a, bs), args)]])


def cmd_freq(args) -> Output:
    a, b, *rest = args.values
    if len(rest) > 1:
        raise DomainError("freq takes a b [c]")
    two_d = bool(rest)
    direct = freq2d_direct(a, b, rest[0]) if two_d else freq1d_direct(a, b)
    if args.method == "both":
        try:
            app = freq2d_appendix(a, b, rest[0]) if two_d else freq1d_appendix(a, b)
        except DomainError as e:
            return Output(text=f"WARN\n  appendix procedure not applicable: {e}\nEND WARN")
        diff = compare_tables(direct, app)
        if not diff:
            return Output(text="MATCH")
        lines = ["WARN", f"  {len(diff)} cell(s) differ (cell, direct, appendix):"]
        lines += [f"  {cell}: {x} {y}" for cell, x, y in diff]
        lines.append("END WARN")
        return Output(text="\n".join(lines))
    table = direct
    if args.method == "appendix":
        table = freq2d_appendix(a, b, rest[0]) if two_d else freq1d_appendix(a, b)
    if args.format == "json":
        if two_d:
            return Output(
                rows=table.counts,
                summary={"row_sums": list(table.row_sums), "col_sums": list(table.col_sums), "a": a},
            )
        return Output(rows=[table.counts])
    return Output(text=table.to_csv())


def _bounds_row(a, b, args):
    rep = bounds_report(a, b)
    cell = render.exact if args.exact else render.table_cell
    return [a, b] + [("" if v is None else cell(v)) for v in rep.row()[2:]]


def cmd_bounds(args) -> Output:
    if args.table_paper:
        return Output(BOUNDS_HEADER, [_bounds_row(a, b, args) for a, b in PUBLISHED_TABLE_ROWS])
    if not args.values or len(args.values) != 2:
        raise DomainError("bounds takes a b (or --table-paper)")
    a, b = args.values
    return Output(rows=[_bounds_row(a, b, args)])


def _ratio_text(r, args) -> str:
    return render.exact(r.squared) if args.exact else r.display(args.precision or 4)


def table_output(name: str, args) -> Output:
    p = args.precision if args.precision is not None else 4
    if name == "fig2":
        return Output(text=freq2d_direct(50, 13, 7).to_csv())
    if name == "bounds":
        return Output(BOUNDS_HEADER, [_bounds_row(a, b, args) for a, b in PUBLISHED_TABLE_ROWS])
    if name == "r2":
        rows = [(a, b2, _ratio_text(ratio2(a, 2, b2), args), _ratio_text(ratio2(a, 3, b2), args))
                for a, b2 in R2_TABLE_ROWS]
        return Output(("a", "b2", "R2_2", "R2_3"), rows)
    if name == "limits":
        places = args.precision if args.precision is not None else 6
        return Output(("b", "limit"), [(b, render.fixed(Fraction(limit_ratio(b)), places)) for b in (2, 3, 4)])
    if name == "fig3":
        return Output(("a", "approx"), [(a, _ratio_text(ratio2(a, 2, a), args)) for a in range(3, 51)])
    if name == "fig5":
        rows = []
        for a in range(3, 36):
            m = min_ratio(a)
            sq = m.value.squared
            rows.append((a, sq.numerator, sq.denominator, m.value.display(p), *m.witness))
        return Output(("a", "min_ratio_sq_num", "min_ratio_sq_den", "approx", "witness_b", "witness_c"), rows)
    if name == "s5":
        rows = []
        for a, bs in S5_TABLE_ROWS:
            s = generalized_sum(a, bs)
            ub = upper_bound(a, bs, symmetric_recipe(5))
            alt = upper_bound(a, bs, split_recipe(5, 1))
            rows.append((
                a, " ".join(map(str, bs)),
                render.exact(s) if args.exact else render.significant(s),
                render.significant(float(ub)), render.significant(float(alt)),
                render.fixed(float(ratio_d(a, bs)), p),
            ))
        return Output(("a", "b", "S5", "bound_S5bound", "bound_S5boundalt", "R5"), rows)
    raise DomainError(f"unknown table {name!r}")


def cmd_table(args) -> Output:
    return table_output(args.name, args)


def parse_range(s: str) -> tuple[int, int]:
    try:
        lo, hi = s.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {s!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {s!r}")
    return lo, hi


def cmd_sweep(args) -> Output:
    lo, hi = args.a_range
    cfg = SweepConfig(
        mode=args.mode, a_lo=lo, a_hi=hi,
        workers=SweepConfig.resolve_workers(args.workers),
        exhaustive=args.exhaustive, r_max=args.r_max, b_max=args.b_max,
        precision=args.precision if args.precision is not None else 4,
    )
    res = run_sweep(cfg)
    summary = dict(res.summary)
    if cfg.mode == "r2" and summary:
        summary = {"min": f"{summary['min_sq']} (≈{summary['approx']}) at {summary['witness']}",
                   "counterexample": res.counterexample}
    if cfg.mode == "logconvex":
        summary["result"] = f"{summary['violations']} violations (excluding degenerate)"
    out = Output(res.header, res.rows, summary)
    out.counterexample = res.counterexample
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--precision", type=int, default=None, help="decimal places for display")
    common.add_argument("--exact", action="store_true", help="emit rationals as p/q")
    common.add_argument("--out", default=None, help="write output to FILE (atomically)")

    p = argparse.ArgumentParser(prog="dedekind-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sum", parents=[common], help="classical or generalized Dedekind sums")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--classical", nargs=2, type=int, metavar=("A", "B"))
    g.add_argument("--general", nargs="+", type=int, metavar="N", help="a b1 [b2 ...]")
    s.add_argument("--scaled", action="store_true", help="print a * S_d as an integer")
    s.set_defaults(func=cmd_sum)

    f = sub.add_parser("freq", parents=[common], help="frequency tables")
    f.add_argument("values", nargs="+", type=int, metavar="N", help="a b [c]")
    f.add_argument("--method", choices=("direct", "appendix", "both"), default="direct")
    f.set_defaults(func=cmd_freq)

    b = sub.add_parser("bounds", parents=[common], help="bounds for a * M_2")
    b.add_argument("values", nargs="*", type=int, metavar="N")
    b.add_argument("--table-paper", action="store_true", help="all published comparison rows")
    b.set_defaults(func=cmd_bounds)

    t = sub.add_parser("table", parents=[common], help="reproduce a published table or figure series")
    t.add_argument("name", choices=("fig2", "bounds", "r2", "limits", "fig3", "fig5", "s5"))
    t.set_defaults(func=cmd_table)

    w = sub.add_parser("sweep", parents=[common], help="parameter sweeps")
    w.add_argument("--mode", choices=MODES, default="r2")
    w.add_argument("--a-range", type=parse_range, default=(3, 35), metavar="LO..HI")
    w.add_argument("--workers", type=int, default=None)
    w.add_argument("--exhaustive", type=int, default=0, metavar="K",
                   help="r2: additionally scan all 2 <= b < c <= K*a")
    w.add_argument("--r-max", type=int, default=5)
    w.add_argument("--b-max", type=int, default=12)
    w.set_defaults(func=cmd_sweep)
    return p


def write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    text = out.render(args.format)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_COUNTEREXAMPLE if getattr(out, "counterexample", False) else 0


if __name__ == "__main__":
    sys.exit(main())

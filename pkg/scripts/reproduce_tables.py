"""Write every reproduced table as CSV into a directory (default: ./tables)."""

import argparse
from pathlib import Path
from types import SimpleNamespace

from dedekind_lab.cli import table_output, write_atomic

TABLES = ("fig2", "bounds", "r2", "limits", "fig3", "fig5", "s5")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("outdir", nargs="?", default="tables")
    p.add_argument("--exact", action="store_true")
    args = p.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    opts = SimpleNamespace(exact=args.exact, precision=None)
    for name in TABLES:
        path = out / f"{name}.csv"
        write_atomic(str(path), table_output(name, opts).render("csv"))
        print(path)


if __name__ == "__main__":
    main()

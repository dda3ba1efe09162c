"""Residual series for a genus-2 curve, plus step ratios |r_n| / |r_{n+1}|.

    python scripts/run_asymptotics.py --fixture fixture-g2-q2 --n-max 24 --out results/residuals.csv
"""

import argparse
import csv
import sys
from pathlib import Path

from wengzeta import fixtures
from wengzeta.cli import load_curve
from wengzeta.rh import asymptotic_series

COLUMNS = ("r_a", "r_b", "r_beta", "r_alpha")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fixture", default=fixtures.FIXTURE.name)
    ap.add_argument("--curve", help="curve JSON (overrides --fixture)")
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--out", type=Path, help="CSV of exact residuals")
    args = ap.parse_args(argv)

    C = load_curve(args.curve) if args.curve else fixtures.get(args.fixture)
    series = asymptotic_series(C, args.n_max + 1)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(series.to_csv(digits=20, decimal=True))

    rows = {r.n: r for r in series.rows}
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", *(f"{c}_step_ratio" for c in COLUMNS), "r_c"])
    for n in range(1, args.n_max + 1):
        ratios = []
        for c in COLUMNS:
            nxt = abs(getattr(rows[n + 1], c))
            ratios.append(f"{float(abs(getattr(rows[n], c)) / nxt):.6f}" if nxt else "inf")
        w.writerow([n, *ratios, f"{float(rows[n].r_c):.6e}"])


if __name__ == "__main__":
    main()

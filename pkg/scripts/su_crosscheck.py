"""Timed special-uniformity crosscheck over every built-in curve."""

import argparse
import time

from wengzeta import fixtures
from wengzeta.uniformity import su_crosscheck


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--samples", type=int, default=3)
    args = ap.parse_args(argv)

    bad = 0
    print("curve,n,samples,all_equal,seconds")
    for C in fixtures.CURVES.values():
        for n in range(1, args.n_max + 1):
            t0 = time.perf_counter()
            evals = su_crosscheck(C, n, args.samples, bound=max(args.n_max, 8))
            ok = all(e.equal for e in evals)
            bad += not ok
            print(f"{C.name},{n},{len(evals)},{ok},{time.perf_counter() - t0:.3f}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()

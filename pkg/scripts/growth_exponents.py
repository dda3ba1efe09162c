"""Measured log_q growth of v_hat, beta_hat(0), beta(0), alpha(0) against their leading exponents."""

import argparse
import math

from wengzeta import fixtures
from wengzeta.curve import v_hat
from wengzeta.invariants import alpha_zero, beta_hat_zero, beta_zero


def exponents(C, n):
    g = C.genus
    return {
        "v_hat": (v_hat(C, n), (g - 1) * n * (n + 1) / 2),
        "beta_hat0": (beta_hat_zero(C, n), (g - 1) * n * (n + 1) / 2),
        "beta0": (beta_zero(C, n), (g - 1) * n * n),
        "alpha0": (alpha_zero(C, n), (g - 1) * (n * n - n)),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fixture", default=fixtures.FIXTURE.name)
    ap.add_argument("--n-max", type=int, default=20)
    args = ap.parse_args(argv)
    C = fixtures.get(args.fixture)
    if C.genus < 2:
        ap.error("leading exponents vanish in genus 1")

    print("n," + ",".join(f"{k}_rel_err" for k in ("v_hat", "beta_hat0", "beta0", "alpha0")) + ",bound,beta_hat_over_v_hat")
    for n in range(2, args.n_max + 1):
        rel = [abs(math.log(v, C.q) / e - 1) for v, e in exponents(C, n).values()]
        ratio = float(beta_hat_zero(C, n) / v_hat(C, n))
        print(f"{n}," + ",".join(f"{r:.5f}" for r in rel) + f",{5 / n:.5f},{ratio:.12f}")


if __name__ == "__main__":
    main()

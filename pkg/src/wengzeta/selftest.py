"""Oracle suite run by ``wengzeta selftest`` on the embedded fixtures."""

from __future__ import annotations

import time
from fractions import Fraction

from . import fixtures
from .assembly import check_functional_equation, check_residues, rank_zeta_polynomial
from .compositions import mass_sum_bruteforce, mass_sum_dp, weight_grid
from .curve import validate_weil_datum
from .invariants import beta_hat_d
from .rh import numeric_consistent, rh_status
from .uniformity import su_crosscheck


def check_weil_data():
    bad = [c.name for c in fixtures.CURVES.values() if not validate_weil_datum(c.artin).ok]
    return not bad, f"invalid: {bad}" if bad else f"{len(fixtures.CURVES)} curves"


def check_dp_bruteforce(n_max=12):
    C = fixtures.FIXTURE
    count = 0
    for n in range(1, n_max + 1):
        for w in weight_grid(n):
            if mass_sum_dp(C, n, w) != mass_sum_bruteforce(C, n, w):
                return False, f"mismatch at n={n}, {w}"
            count += 1
    return True, f"{count} (n, weight) pairs"


def check_naturality():
    for C in fixtures.CURVES.values():
        Z = rank_zeta_polynomial(C, 1)
        if Z.normalized_coeffs != tuple(Fraction(c) for c in C.artin_coeffs):
            return False, C.name
    return True, f"{len(fixtures.CURVES)} curves"


def check_functional_equation_residues(n_max=10):
    for C in fixtures.CURVES.values():
        for n in range(1, n_max + 1):
            Z = rank_zeta_polynomial(C, n)
            if not (check_functional_equation(Z) and check_residues(Z)):
                return False, f"{C.name} n={n}"
    return True, f"n <= {n_max}"


def check_periodicity(n_max=6):
    C = fixtures.FIXTURE
    for n in range(1, n_max + 1):
        for d in range(-n, n + 1):
            if beta_hat_d(C, n, d) != beta_hat_d(C, n, d + n):
                return False, f"n={n} d={d}"
    return True, f"n <= {n_max}"


def check_genus1_rh(n_max=15):
    for C in fixtures.GENUS1:
        for n in range(1, n_max + 1):
            rep = rh_status(rank_zeta_polynomial(C, n))
            if not rep.holds or not numeric_consistent(rep):
                return False, f"{C.name} n={n}: {rep.status}"
    return True, f"{len(fixtures.GENUS1)} curves, n <= {n_max}"


def check_rank23_rh():
    for C in fixtures.GENUS2:
        for n in (2, 3):
            rep = rh_status(rank_zeta_polynomial(C, n))
            if not rep.holds or not numeric_consistent(rep):
                return False, f"{C.name} n={n}: {rep.status}"
    return True, f"{len(fixtures.GENUS2)} curves"


def check_su(n_max=4):
    for C in fixtures.GENUS2:
        for n in range(1, n_max + 1):
            if not all(e.equal for e in su_crosscheck(C, n, samples=3)):
                return False, f"{C.name} n={n}"
    return True, f"n <= {n_max}"


CHECKS = [
    ("weil_data", check_weil_data),
    ("dp_equals_bruteforce", check_dp_bruteforce),
    ("rank1_naturality", check_naturality),
    ("functional_equation_and_residues", check_functional_equation_residues),
    ("periodicity", check_periodicity),
    ("genus1_rh", check_genus1_rh),
    ("rank2_rank3_rh", check_rank23_rh),
    ("special_uniformity", check_su),
]


def run_selftest(emit=print) -> bool:
    ok = True
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a selftest crash
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        ok &= passed
        emit(f"{'PASS' if passed else 'FAIL'} {name} ({detail}; {time.perf_counter() - t0:.2f}s)")
    return ok

"""Degree-0 and degree-n invariants from their closed formulas.

    beta_hat_n(d)  semi-stable mass (ordered-composition sum)
    beta_n(0)      = q^{(g-1) n(n-1)/2} beta_hat_n(0)
    alpha_n(0)     = q^{(n-1)(g-1)} beta_{n-1}(0),   alpha_1(0) = 1
    alpha_n(n)     genus 2 only, four-term composition formula

alpha_n(nm) for 0 < m < g-1 has no closed form here, so nothing beyond
genus 2 can be assembled.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb

from .compositions import WeightSpec, mass_sum_dp
from .curve import CurveDatum, v_hat
from .errors import UnsupportedGenus

# boundary weights of the alpha_n(n) formula
FIRST_PART_WEIGHT = WeightSpec.first_exponent(1, 1)  # q^{1 + l_1}
LAST_PART_WEIGHT = WeightSpec.last_exponent(-1)  # q^{-k_p}


class InvariantTable:
    """Per-curve memo of exact invariants. Reads are lock-free, writes are serialized."""

    def __init__(self, curve: CurveDatum):
        self.curve = curve
        self._lock = threading.Lock()
        self._beta_hat = {0: Fraction(1)}
        self._beta_hat_d = {}
        self._alpha_nn = {}
        self._last_sum = {0: Fraction(1)}

    def _store(self, table, key, value):
        with self._lock:
            return table.setdefault(key, value)

    def v_hat(self, n: int) -> Fraction:
        return v_hat(self.curve, n)

    def beta_hat_zero(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("n must be >= 1")
        hit = self._beta_hat.get(n)
        if hit is not None:
            return hit
        for m in range(1, n + 1):
            if m not in self._beta_hat:
                self._store(self._beta_hat, m, mass_sum_dp(self.curve, m))
        return self._beta_hat[n]

    def beta_hat_d(self, n: int, d: int) -> Fraction:
        if n < 1:
            raise ValueError("n must be >= 1")
        key = (n, d % n)
        hit = self._beta_hat_d.get(key)
        if hit is not None:
            return hit
        w = WeightSpec(fractional_d=d % n, sign_mode="alternating")
        return self._store(self._beta_hat_d, key, mass_sum_dp(self.curve, n, w))

    def beta_zero(self, n: int) -> Fraction:
        g = self.curve.genus
        return Fraction(self.curve.q) ** ((g - 1) * n * (n - 1) // 2) * self.beta_hat_zero(n)

    def alpha_zero(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("n must be >= 1")
        if n == 1:
            return Fraction(1)
        g = self.curve.genus
        return Fraction(self.curve.q) ** ((n - 1) * (g - 1)) * self.beta_zero(n - 1)

    def _last_weighted(self, m: int) -> Fraction:
        hit = self._last_sum.get(m)
        if hit is not None:
            return hit
        return self._store(self._last_sum, m, mass_sum_dp(self.curve, m, LAST_PART_WEIGHT))

    def alpha_n_n(self, n: int) -> Fraction:
        C = self.curve
        if C.genus != 2:
            raise UnsupportedGenus(f"alpha_n(n) closed formula needs genus 2, got {C.genus}")
        if n < 1:
            raise ValueError("n must be >= 1")
        if n == 1:
            return Fraction(C.N1)
        hit = self._alpha_nn.get(n)
        if hit is not None:
            return hit
        total = C.N1 * self.beta_hat_zero(n - 1)
        total += mass_sum_dp(C, n - 1, FIRST_PART_WEIGHT)
        total -= self._last_weighted(n - 1)
        for a in range(2, n):
            total -= self._last_weighted(n - a) * self.beta_hat_zero(a - 1)
        return self._store(self._alpha_nn, n, Fraction(C.q) ** comb(n, 2) * total)

    def row(self, n: int) -> dict:
        out = {
            "n": n,
            "v_hat": self.v_hat(n),
            "beta_hat0": self.beta_hat_zero(n),
            "beta0": self.beta_zero(n),
            "alpha0": self.alpha_zero(n),
        }
        if self.curve.genus == 2:
            out["alpha_nn"] = self.alpha_n_n(n)
        return out


_tables_lock = threading.Lock()


@lru_cache(maxsize=None)
def _table(curve: CurveDatum) -> InvariantTable:
    return InvariantTable(curve)


def invariant_table(curve: CurveDatum) -> InvariantTable:
    with _tables_lock:
        return _table(curve)


def beta_hat_d(C: CurveDatum, n: int, d: int) -> Fraction:
    return invariant_table(C).beta_hat_d(n, d)


def beta_hat_zero(C: CurveDatum, n: int) -> Fraction:
    return invariant_table(C).beta_hat_zero(n)


def beta_zero(C: CurveDatum, n: int) -> Fraction:
    return invariant_table(C).beta_zero(n)


def alpha_zero(C: CurveDatum, n: int) -> Fraction:
    return invariant_table(C).alpha_zero(n)


def alpha_n_n(C: CurveDatum, n: int) -> Fraction:
    return invariant_table(C).alpha_n_n(n)

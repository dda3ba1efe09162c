"""Special-uniformity evaluation of the completed rank-n zeta.

Everything is written in y = q^{ns}, so the rank-n completed zeta at s equals
the assembled one at T = 1/y:

    zeta_n(y) = q^{C(n,2)(g-1)} sum_{a=1}^n  L_a(y) * zeta_1(y q^{a-n}) * R_a(y)

    L_a = sum over (k_1..k_p) |= n-a of  vhat_k / prod(1 - q^{k_j+k_{j+1}})
              * 1 / (1 - y q^{a - n + k_p})
    R_a = sum over (l_1..l_r) |= a-1 of  1 / (1 - q^{n - a + 1 + l_1} / y)
              * vhat_l / prod(1 - q^{l_j+l_{j+1}})

with an empty composition (of 0) contributing 1, and zeta_1 the completed
rank-1 zeta, zeta_1(s') = u^{1-g} P(u) / ((1-u)(1-qu)), u = q^{-s'}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .assembly import rank_zeta_polynomial, zeta_hat_eval
from .compositions import WeightSpec, mass_sum_dp
from .curve import CurveDatum
from .errors import PoleEvaluation, UnsupportedGenus
from .rational import frac_str, qpow

DEFAULT_SU_BOUND = 8


def pole_exponents(n: int) -> range:
    """Every pole of a single summand sits at y = q^m with 0 <= m <= n."""
    return range(0, n + 1)


def is_pole(q: int, n: int, y: Fraction) -> bool:
    return y == 0 or any(y == q**m for m in pole_exponents(n))


def sample_points(q: int, n: int, count: int) -> list:
    """Deterministic small-height rationals 3, 5/2, 7/3, ... avoiding the pole set."""
    out = []
    k = 1
    while len(out) < count:
        y = Fraction(2 * k + 1, k)
        if not is_pole(q, n, y):
            out.append(y)
        k += 1
    return out


def _rank_one_completed(C: CurveDatum, u: Fraction, where: str) -> Fraction:
    if u == 1 or C.q * u == 1:
        raise PoleEvaluation(f"rank-1 zeta pole in {where}", factor=where)
    return (1 / u) ** (C.genus - 1) * C.artin(u) / ((1 - u) * (1 - C.q * u))


def _guarded(factor_den: Fraction, where: str) -> Fraction:
    if factor_den == 0:
        raise PoleEvaluation(f"vanishing denominator in {where}", factor=where)
    return 1 / factor_den


def left_bracket(C: CurveDatum, n: int, a: int, y: Fraction) -> Fraction:
    m = n - a
    if m == 0:
        return Fraction(1)
    q = C.q
    where = f"left bracket a={a}"
    w = WeightSpec(boundary="last", boundary_fn=lambda kp: _guarded(1 - y * qpow(q, a - n + kp), where))
    return mass_sum_dp(C, m, w)


def right_bracket(C: CurveDatum, n: int, a: int, y: Fraction) -> Fraction:
    m = a - 1
    if m == 0:
        return Fraction(1)
    q = C.q
    where = f"right bracket a={a}"
    w = WeightSpec(boundary="first", boundary_fn=lambda l1: _guarded(1 - qpow(q, n - a + 1 + l1) / y, where))
    return mass_sum_dp(C, m, w)


def su_terms(C: CurveDatum, n: int, y) -> list:
    """zeta^{[a]}(y) for a = 1..n (without the q^{C(n,2)(g-1)} prefactor)."""
    if C.genus not in (1, 2):
        raise UnsupportedGenus(f"special uniformity evaluation supports genus 1 and 2, got {C.genus}")
    y = Fraction(y)
    if y == 0:
        raise PoleEvaluation("y = 0", factor="y")
    terms = []
    for a in range(1, n + 1):
        u = qpow(C.q, n - a) / y
        mid = _rank_one_completed(C, u, f"rank-1 zeta a={a}")
        terms.append(left_bracket(C, n, a, y) * mid * right_bracket(C, n, a, y))
    return terms


def su_zeta_eval(C: CurveDatum, n: int, y) -> Fraction:
    terms = su_terms(C, n, y)
    return Fraction(C.q) ** (comb(n, 2) * (C.genus - 1)) * sum(terms)


@dataclass
class SUEvaluation:
    n: int
    y: Fraction
    terms: list
    total: Fraction
    reference: Fraction
    equal: bool = field(init=False)

    def __post_init__(self):
        self.equal = self.total == self.reference


def su_crosscheck(C: CurveDatum, n: int, samples: int = 3, bound: int = DEFAULT_SU_BOUND) -> list:
    if n > bound:
        raise ValueError(f"n={n} exceeds the configured bound {bound}")
    Z = rank_zeta_polynomial(C, n)
    scale = Fraction(C.q) ** (comb(n, 2) * (C.genus - 1))
    out = []
    for y in sample_points(C.q, n, samples):
        terms = su_terms(C, n, y)
        out.append(SUEvaluation(n, y, terms, scale * sum(terms), zeta_hat_eval(Z, 1 / y)))
    return out


def su_report_json(n: int, evaluations: list) -> dict:
    return {"n": n, "samples": [{"y": frac_str(e.y), "equal": e.equal} for e in evaluations]}

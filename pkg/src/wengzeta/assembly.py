"""Rank-n zeta polynomial P_n(T) for genus 1 and 2.

genus 2:  P_n / alpha_n(0) = 1 + a_n T + b_n T^2 + a_n Q T^3 + Q^2 T^4
genus 1:  P_n = alpha_n(0)(1-T)(1-QT) + (Q-1) beta_n(0) T
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import CurveDatum
from .errors import PoleEvaluation, UnsupportedGenus
from .invariants import invariant_table
from .rational import frac_str


@dataclass(frozen=True)
class RankZetaPolynomial:
    curve: CurveDatum
    n: int
    Q: int
    alpha0: Fraction
    beta0: Fraction
    normalized_coeffs: tuple
    # alpha_n(n(g-1)): the middle alpha of the additive form
    alpha_mid: Fraction

    @property
    def genus(self) -> int:
        return (len(self.normalized_coeffs) - 1) // 2

    @property
    def coeffs(self) -> tuple:
        return tuple(self.alpha0 * c for c in self.normalized_coeffs)

    @property
    def a_n(self) -> Fraction:
        return self.normalized_coeffs[1]

    @property
    def b_n(self) -> Fraction:
        if self.genus != 2:
            raise UnsupportedGenus("b_n only exists for genus 2")
        return self.normalized_coeffs[2]

    def __call__(self, T) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * T + c
        return acc

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "Q": str(self.Q),
            "alpha0": frac_str(self.alpha0),
            "coeffs": [frac_str(c) for c in self.normalized_coeffs],
        }


def rank_zeta_polynomial(C: CurveDatum, n: int) -> RankZetaPolynomial:
    if C.genus not in (1, 2):
        # interior alpha_n(nm), 0 < m < g-1, has no closed formula available
        raise UnsupportedGenus(f"P_n(T) can only be assembled for genus 1 or 2, got {C.genus}")
    if n < 1:
        raise ValueError("n must be >= 1")
    tab = invariant_table(C)
    Q = C.q**n
    alpha0 = tab.alpha_zero(n)
    beta0 = tab.beta_zero(n)
    ratio_beta = beta0 / alpha0
    if C.genus == 2:
        alpha_mid = tab.alpha_n_n(n)
        ratio_alpha = alpha_mid / alpha0
        a_n = ratio_alpha - (Q + 1)
        b_n = (Q - 1) * ratio_beta + 2 * Q - (Q + 1) * ratio_alpha
        coeffs = (Fraction(1), a_n, b_n, a_n * Q, Fraction(Q * Q))
    else:
        alpha_mid = alpha0
        a_n = (Q - 1) * ratio_beta - (Q + 1)
        coeffs = (Fraction(1), a_n, Fraction(Q))
    return RankZetaPolynomial(C, n, Q, alpha0, beta0, coeffs, alpha_mid)


def check_functional_equation(Z: RankZetaPolynomial) -> bool:
    c, g, Q = Z.normalized_coeffs, Z.genus, Z.Q
    if len(c) != 2 * g + 1:
        return False
    return all(c[2 * g - i] == Fraction(Q) ** (g - i) * c[i] for i in range(g + 1))


def check_residues(Z: RankZetaPolynomial) -> bool:
    Q, g = Z.Q, Z.genus
    at_one = Z(Fraction(1)) == (Q - 1) * Z.beta0
    at_inv_q = Z(Fraction(1, Q)) == (Q - 1) * Z.beta0 / Fraction(Q) ** g
    return at_one and at_inv_q


def _check_pole(Z: RankZetaPolynomial, T: Fraction):
    if T == 1:
        raise PoleEvaluation("T = 1 is a pole of Z_n", factor="1 - T")
    if T * Z.Q == 1:
        raise PoleEvaluation("T = 1/Q is a pole of Z_n", factor="1 - QT")
    if T == 0 and Z.genus >= 2:
        raise PoleEvaluation("T = 0 is a pole of the completed zeta for g >= 2", factor="T^(g-1)")


def zeta_hat_eval_additive(Z: RankZetaPolynomial, T) -> Fraction:
    """Completed zeta as alpha-terms plus the (Q-1) beta_n(0) T / ((1-T)(1-QT)) tail."""
    T = Fraction(T)
    _check_pole(Z, T)
    Q = Z.Q
    tail = (Q - 1) * Z.beta0 * T / ((1 - T) * (1 - Q * T))
    if Z.genus == 1:
        return Z.alpha_mid + tail
    return Z.alpha0 * (1 / T + Q * T) + Z.alpha_mid + tail


def zeta_hat_eval(Z: RankZetaPolynomial, T) -> Fraction:
    """P_n(T) / ((1-T)(1-QT) T^{g-1})."""
    T = Fraction(T)
    _check_pole(Z, T)
    value = Z(T) / ((1 - T) * (1 - Z.Q * T) * T ** (Z.genus - 1))
    if __debug__:
        assert value == zeta_hat_eval_additive(Z, T), "product and additive forms disagree"
    return value

"""Exact Riemann-hypothesis decision for P_n(T), and the large-n residual series.

For genus 2 write P_n / alpha_n(0) = (1 + c_1 T + Q T^2)(1 + c_2 T + Q T^2);
c_1, c_2 are the roots of x^2 - a_n x + (b_n - 2Q). All reciprocal roots have
norm sqrt(Q) iff both c_i are real with |c_i| <= 2 sqrt(Q). The decision is
made in exact arithmetic: every comparison against sqrt(Q) is reduced to the
sign of u + v sqrt(Q) with rational u, v.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath

from .assembly import RankZetaPolynomial, rank_zeta_polynomial
from .curve import DEFAULT_PRECISION, ROOT_TOLERANCE, CurveDatum, v_hat
from .errors import UnsupportedGenus
from .rational import frac_str, polyroots_exact, to_mpf

HOLDS_STRICT = "holds_strict"
HOLDS_BOUNDARY = "holds_boundary"
FAILS_REAL = "fails_real_root_off_line"
FAILS_COMPLEX = "fails_complex_pairing"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_u_v_sqrt(u: Fraction, v: Fraction, Q: int) -> int:
    """Sign of u + v*sqrt(Q), exactly."""
    su, sv = _sign(u), _sign(v)
    if sv == 0:
        return su
    if su == 0:
        return sv
    if su == sv:
        return su
    # opposite signs: compare u^2 with v^2 Q
    return su * _sign(u * u - v * v * Q)


@dataclass(frozen=True)
class Split:
    sum: Fraction
    product: Fraction
    discriminant: Fraction

    def numeric(self, precision: int = DEFAULT_PRECISION):
        with mpmath.workdps(precision):
            r = mpmath.sqrt(mpmath.mpc(to_mpf(self.discriminant)))
            s = to_mpf(self.sum)
            return ((s + r) / 2, (s - r) / 2)


@dataclass
class RHReport:
    n: int
    Q: int
    status: str
    split: Optional[Split]
    margins: dict = field(default_factory=dict)
    numeric_roots: list = field(default_factory=list)
    root_ratios: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.status in (HOLDS_STRICT, HOLDS_BOUNDARY)

    def max_root_deviation(self):
        return max(abs(r - 1) for r in self.root_ratios)

    def to_json(self, digits: int = 20) -> dict:
        out = {"n": self.n, "Q": str(self.Q), "status": self.status}
        if self.split is not None:
            out["split"] = {
                "sum": frac_str(self.split.sum),
                "product": frac_str(self.split.product),
                "discriminant": frac_str(self.split.discriminant),
            }
        out["margins"] = dict(self.margins)
        out["root_norm_over_sqrtQ"] = [mpmath.nstr(r, digits) for r in self.root_ratios]
        return out


def quadratic_split(Z: RankZetaPolynomial) -> Split:
    if Z.genus != 2:
        raise UnsupportedGenus("the quadratic split is defined for genus 2")
    s = Z.a_n
    p = Z.b_n - 2 * Z.Q
    return Split(s, p, s * s - 4 * p)


def _quadratic_factor_status(c: Fraction, Q: int) -> str:
    """Status of 1 + cT + QT^2 for real rational c."""
    gap = c * c - 4 * Q
    if gap < 0:
        return HOLDS_STRICT
    if gap == 0:
        return HOLDS_BOUNDARY
    return FAILS_REAL


def _split_status(split: Split, Q: int, margins: dict) -> str:
    if split.discriminant < 0:
        return FAILS_COMPLEX
    s, p = split.sum, split.product
    # h(x) = x^2 - s x + p; both roots in [-2 sqrt Q, 2 sqrt Q] iff
    # h(+2 sqrt Q) >= 0, h(-2 sqrt Q) >= 0 and |s| <= 4 sqrt Q
    u = 4 * Q + p
    at_plus = sign_u_v_sqrt(u, -2 * s, Q)
    at_minus = sign_u_v_sqrt(u, 2 * s, Q)
    vertex = _sign(16 * Q - s * s)
    margins["h(+2sqrtQ)"] = f"{frac_str(u)} - {frac_str(2 * s)}*sqrt({Q})"
    margins["h(-2sqrtQ)"] = f"{frac_str(u)} + {frac_str(2 * s)}*sqrt({Q})"
    margins["16Q-sum^2"] = frac_str(16 * Q - s * s)
    margins["discriminant"] = frac_str(split.discriminant)
    if min(at_plus, at_minus, vertex) < 0:
        return FAILS_REAL
    if at_plus > 0 and at_minus > 0 and vertex > 0 and split.discriminant > 0:
        return HOLDS_STRICT
    return HOLDS_BOUNDARY


def numeric_reciprocal_roots(Z: RankZetaPolynomial, precision: int = DEFAULT_PRECISION) -> list:
    """Roots of T^{2g} P_n(1/T), i.e. the reciprocal roots of P_n."""
    return polyroots_exact(tuple(reversed(Z.normalized_coeffs)), precision)


def rh_status(Z: RankZetaPolynomial, precision: int = DEFAULT_PRECISION) -> RHReport:
    Q = Z.Q
    margins = {}
    if Z.genus == 2:
        split = quadratic_split(Z)
        status = _split_status(split, Q, margins)
    elif Z.genus == 1:
        split = None
        status = _quadratic_factor_status(Z.a_n, Q)
        margins["4Q-a^2"] = frac_str(4 * Q - Z.a_n * Z.a_n)
    else:
        raise UnsupportedGenus(f"no RH decision for genus {Z.genus}")

    roots = numeric_reciprocal_roots(Z, precision)
    with mpmath.workdps(precision):
        sq = mpmath.sqrt(Q)
        ratios = [abs(r) / sq for r in roots]
    return RHReport(Z.n, Q, status, split, margins, list(roots), ratios)


def numeric_consistent(report: RHReport) -> bool:
    """holds_* must come with every |root|/sqrt(Q) within 1e-9 of 1."""
    if not report.holds:
        return True
    return report.max_root_deviation() < ROOT_TOLERANCE


# --------------------------------------------------------------------------
# large-n behaviour (genus 2)


def limit_constants(C: CurveDatum) -> tuple:
    """(c_beta, c_alpha): the constant terms in the large-n limits of
    Q beta_n(0)/alpha_n(0) and Q alpha_n(n)/alpha_n(0) beyond Q^2 + N_1 Q."""
    q, v1 = C.q, v_hat(C, 1)
    c_beta = q + (q - 1) * v1 + 2 * q * q * v1 - 2 * v1
    c_alpha = 2 * q * q * v1 - q * v1 - v1 - q
    return c_beta, c_alpha


@dataclass
class ConvergenceRow:
    n: int
    r_a: Fraction
    r_b: Fraction
    r_beta: Fraction
    r_alpha: Fraction
    r_c: object
    status: str


@dataclass
class ConvergenceSeries:
    curve: CurveDatum
    n_range: range
    c_beta: Fraction
    c_alpha: Fraction
    rows: list

    def column(self, name: str) -> list:
        return [getattr(r, name) for r in self.rows]

    def to_csv(self, digits: int = DEFAULT_PRECISION, decimal: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["n", "r_a", "r_b", "r_beta", "r_alpha", "r_c", "status"]
        exact = ["r_a", "r_b", "r_beta", "r_alpha"]
        if decimal:
            header += [f"{k}_decimal" for k in exact]
        w.writerow(header)
        for r in self.rows:
            rec = [r.n, *(frac_str(getattr(r, k)) for k in exact), mpmath.nstr(r.r_c, digits), r.status]
            if decimal:
                rec += [mpmath.nstr(to_mpf(getattr(r, k)), 20) for k in exact]
            w.writerow(rec)
        return buf.getvalue()


def split_deviation(split: Split, Q: int, precision: int = DEFAULT_PRECISION):
    """max_i | |c_i| / (2 sqrt Q) - sqrt(2)/2 |."""
    with mpmath.workdps(precision):
        half_root2 = mpmath.sqrt(2) / 2
        scale = 2 * mpmath.sqrt(Q)
        return max(abs(abs(c) / scale - half_root2) for c in split.numeric(precision))


def convergence_row(C: CurveDatum, n: int, precision: int = DEFAULT_PRECISION) -> ConvergenceRow:
    Z = rank_zeta_polynomial(C, n)
    N1, N2 = C.N(1), C.N(2)
    Q = Z.Q
    c_beta, c_alpha = limit_constants(C)
    r_a = Z.a_n - (N1 - 1)
    r_b = Z.b_n - (N2 + N1 * N1 - 2 * N1)
    r_beta = Q * Z.beta0 / Z.alpha0 - Q * Q - N1 * Q - c_beta
    r_alpha = Q * Z.alpha_mid / Z.alpha0 - Q * Q - N1 * Q - c_alpha
    split = quadratic_split(Z)
    r_c = split_deviation(split, Q, precision)
    status = _split_status(split, Q, {})
    return ConvergenceRow(n, r_a, r_b, r_beta, r_alpha, r_c, status)


def asymptotic_series(C: CurveDatum, n_max: int, precision: int = DEFAULT_PRECISION) -> ConvergenceSeries:
    if C.genus != 2:
        raise UnsupportedGenus("the residual series is defined for genus 2")
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    c_beta, c_alpha = limit_constants(C)
    rows = [convergence_row(C, n, precision) for n in range(1, n_max + 1)]
    return ConvergenceSeries(C, range(1, n_max + 1), c_beta, c_alpha, rows)

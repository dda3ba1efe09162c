"""Curve data: the Weil polynomial of X/F_q and completed rank-1 zeta values.

The user supplies either the point counts N_1..N_g (N_k = #X(F_{q^k})) or the
2g+1 coefficients of P(t); the other half is derived exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import mpmath

from .errors import InvalidCurve, LengthMismatch, NonIntegralCoefficient
from .rational import polyroots_exact

DEFAULT_PRECISION = 64
ROOT_TOLERANCE = mpmath.mpf("1e-9")


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


@dataclass(frozen=True)
class ArtinPolynomial:
    """P(t) = 1 + a_1 t + ... + q^g t^{2g}, stored low degree first."""

    q: int
    coefficients: tuple

    @property
    def genus(self) -> int:
        return (len(self.coefficients) - 1) // 2

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def is_symmetric(self) -> bool:
        g, c = self.genus, self.coefficients
        if len(c) != 2 * g + 1 or c[0] != 1:
            return False
        return all(c[2 * g - i] == self.q ** (g - i) * c[i] for i in range(g + 1))


def _symmetric_completion(q: int, genus: int, lower: Sequence[int]) -> tuple:
    coeffs = list(lower) + [0] * genus
    for i in range(genus):
        coeffs[2 * genus - i] = q ** (genus - i) * lower[i]
    return tuple(coeffs)


def derive_artin_coefficients(q: int, genus: int, point_counts: Sequence[int]) -> ArtinPolynomial:
    """Recover P(t) from N_1..N_g.

    Z(t) = exp(sum N_k t^k / k) is expanded to order g, multiplied by
    (1-t)(1-qt), and the upper half filled in by the functional equation.
    """
    if len(point_counts) != genus:
        raise LengthMismatch(f"expected {genus} point counts, got {len(point_counts)}")
    if any(n < 0 for n in point_counts):
        raise InvalidCurve(f"point counts must be nonnegative: {list(point_counts)}")
    N = [0] + [int(n) for n in point_counts]

    # m A_m = sum_{k=1}^m N_k A_{m-k}
    A = [Fraction(1)]
    for m in range(1, genus + 1):
        A.append(sum(N[k] * A[m - k] for k in range(1, m + 1)) / m)
    # multiplication by 1 - (q+1) t + q t^2
    lower = []
    for i in range(genus + 1):
        c = A[i]
        if i >= 1:
            c -= (q + 1) * A[i - 1]
        if i >= 2:
            c += q * A[i - 2]
        if c.denominator != 1:
            raise NonIntegralCoefficient(
                f"coefficient of t^{i} is {c}; N={list(point_counts)} is not a Weil datum over F_{q}"
            )
        lower.append(int(c))

    if genus == 2:
        a = N[1] - 1 - q
        assert lower[1] == a and 2 * lower[2] == N[2] - 1 - q * q + a * a
    return ArtinPolynomial(q, _symmetric_completion(q, genus, lower))


def power_sums(P: ArtinPolynomial, k_max: int) -> list:
    """Power sums p_1..p_{k_max} of the reciprocal roots, via Newton's identities."""
    c = P.coefficients
    deg = len(c) - 1
    p = [0]
    for k in range(1, k_max + 1):
        ck = c[k] if k <= deg else 0
        s = -k * ck - sum(c[i] * p[k - i] for i in range(1, min(k, deg + 1)))
        p.append(s)
    return p[1:]


def point_count(P: ArtinPolynomial, k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    return P.q**k + 1 - power_sums(P, k)[-1]


@dataclass(frozen=True)
class CurveDatum:
    """Arithmetic input for one curve.

    Exactly one of ``point_counts`` / ``artin_coeffs`` is given; the other is
    filled in on construction.
    """

    q: int
    genus: int
    point_counts: Optional[tuple] = None
    artin_coeffs: Optional[tuple] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.q, int) or not is_prime_power(self.q):
            raise InvalidCurve(f"q must be a prime power >= 2, got {self.q!r}")
        if not isinstance(self.genus, int) or self.genus < 1:
            raise InvalidCurve(f"genus must be a positive integer, got {self.genus!r}")
        if (self.point_counts is None) == (self.artin_coeffs is None):
            raise InvalidCurve("supply exactly one of point_counts / artin_coeffs")

        if self.point_counts is not None:
            P = derive_artin_coefficients(self.q, self.genus, tuple(self.point_counts))
            object.__setattr__(self, "point_counts", tuple(int(n) for n in self.point_counts))
            object.__setattr__(self, "artin_coeffs", P.coefficients)
        else:
            coeffs = tuple(int(c) for c in self.artin_coeffs)
            if len(coeffs) != 2 * self.genus + 1:
                raise LengthMismatch(f"expected {2 * self.genus + 1} coefficients, got {len(coeffs)}")
            P = ArtinPolynomial(self.q, coeffs)
            if not P.is_symmetric():
                raise InvalidCurve(f"coefficients {list(coeffs)} break P(0)=1 or the functional equation")
            object.__setattr__(self, "artin_coeffs", coeffs)
            object.__setattr__(
                self, "point_counts", tuple(point_count(P, k) for k in range(1, self.genus + 1))
            )

    @property
    def artin(self) -> ArtinPolynomial:
        return ArtinPolynomial(self.q, self.artin_coeffs)

    @property
    def N1(self) -> int:
        return self.point_counts[0]

    def N(self, k: int) -> int:
        return point_count(self.artin, k)

    @classmethod
    def from_json(cls, obj: dict) -> "CurveDatum":
        try:
            q, genus = obj["q"], obj["genus"]
        except KeyError as exc:
            raise InvalidCurve(f"curve JSON is missing {exc}") from None
        if "point_counts" in obj and "artin_coeffs" in obj:
            raise InvalidCurve("curve JSON must not carry both point_counts and artin_coeffs")
        if "point_counts" in obj:
            return cls(q, genus, point_counts=tuple(obj["point_counts"]), name=obj.get("name", ""))
        if "artin_coeffs" in obj:
            return cls(q, genus, artin_coeffs=tuple(obj["artin_coeffs"]), name=obj.get("name", ""))
        raise InvalidCurve("curve JSON needs point_counts or artin_coeffs")

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "genus": self.genus,
            "point_counts": list(self.point_counts),
            "artin_coeffs": list(self.artin_coeffs),
        }


# --------------------------------------------------------------------------
# validation


@dataclass
class Check:
    name: str
    passed: bool
    margin: Optional[str] = None
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list:
        return [c.name for c in self.checks if not c.passed]


def artin_roots(P: ArtinPolynomial, precision: int = DEFAULT_PRECISION) -> list:
    return polyroots_exact(P.coefficients, precision)


def validate_weil_datum(P: ArtinPolynomial, precision: int = DEFAULT_PRECISION) -> ValidationReport:
    """Symmetry, Hasse-Weil for N_1..N_g, and |root| = q^{-1/2} for every root of P."""
    q, g = P.q, P.genus
    checks = [Check("symmetry", P.is_symmetric())]

    for k in range(1, g + 1):
        Nk = point_count(P, k)
        dev = Nk - (q**k + 1)
        # |dev| <= 2g q^{k/2}  <=>  dev^2 <= 4 g^2 q^k
        within = dev * dev <= 4 * g * g * q**k
        with mpmath.workdps(30):
            margin = 2 * g * mpmath.sqrt(q) ** k - abs(dev)
        detail = f"N_{k}={Nk}"
        if Nk < 0:
            detail += " (negative point count)"
        checks.append(Check(f"hasse_weil_N{k}", within and Nk >= 0, mpmath.nstr(margin, 15), detail))

    try:
        roots = artin_roots(P, precision)
    except mpmath.libmp.NoConvergence:
        checks.append(Check("rank1_rh", False, detail="root finder did not converge"))
    else:
        with mpmath.workdps(precision):
            target = 1 / mpmath.sqrt(q)
            worst = max(abs(abs(r) - target) for r in roots)
            norms = ", ".join(mpmath.nstr(abs(r), 12) for r in roots)
            checks.append(
                Check("rank1_rh", worst < ROOT_TOLERANCE, mpmath.nstr(worst, 5), f"|roots| = {norms}")
            )
    return ValidationReport(checks)


# --------------------------------------------------------------------------
# completed rank-1 zeta at integers


@lru_cache(maxsize=None)
def zeta_hat_at_integer(C: CurveDatum, m: int) -> Fraction:
    """zeta-hat(m) for m >= 2; the regularized value zeta-hat*(1) for m = 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    q, g, P = C.q, C.genus, C.artin
    t = Fraction(1, q**m)
    scale = Fraction(q) ** (m * (g - 1))
    if m == 1:
        return scale * P(t) / (1 - t)
    return scale * P(t) / ((1 - t) * (1 - q * t))


@lru_cache(maxsize=None)
def v_hat(C: CurveDatum, n: int) -> Fraction:
    """zeta-hat*(1) zeta-hat(2) ... zeta-hat(n)."""
    if n < 1:
        raise ValueError("v_hat is defined for n >= 1")
    if n == 1:
        return zeta_hat_at_integer(C, 1)
    return v_hat(C, n - 1) * zeta_hat_at_integer(C, n)

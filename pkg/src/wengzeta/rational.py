"""Exact-rational helpers shared by the report writers."""

from __future__ import annotations

from fractions import Fraction

import mpmath


def frac_str(x) -> str:
    """Serialize an exact rational as ``"num/den"`` (denominator always present)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(str(s).strip())


def to_mpf(x):
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def decimal_str(x, digits: int = 20) -> str:
    return mpmath.nstr(to_mpf(x), digits)


def qpow(q: int, e: int) -> Fraction:
    """q**e as an exact rational, for any integer e."""
    if e >= 0:
        return Fraction(q**e)
    return Fraction(1, q ** (-e))


def polyroots_exact(coeffs, precision: int):
    """Numeric roots of an exact polynomial (coefficients low degree first),
    with multiplicity.

    The polynomial is split into squarefree factors exactly first, so the
    numeric root finder only ever sees simple roots.
    """
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(
        [sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in reversed(coeffs)], x
    )
    _, factors = poly.sqf_list()
    roots = []
    with mpmath.workdps(precision):
        for factor, mult in factors:
            fc = [to_mpf(Fraction(int(c.p), int(c.q))) for c in factor.all_coeffs()]
            if len(fc) < 2:
                continue
            rs = mpmath.polyroots(fc, maxsteps=500, extraprec=2 * precision)
            roots.extend(list(rs) * mult)
    return roots

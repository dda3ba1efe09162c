"""Reference computations that share no code with the package."""

from fractions import Fraction
from itertools import product

import sympy


def artin_by_series(q, genus, point_counts):
    """Coefficients of P(t) from sympy's series of exp(sum N_k t^k / k)(1-t)(1-qt)."""
    t = sympy.Symbol("t")
    log_z = sum(sympy.Rational(N, k) * t**k for k, N in enumerate(point_counts, start=1))
    P = sympy.series(sympy.exp(log_z) * (1 - t) * (1 - q * t), t, 0, genus + 1).removeO()
    return [sympy.Rational(P.coeff(t, i)) for i in range(genus + 1)]


def compositions_by_cuts(n):
    """Compositions of n from the 2^{n-1} subsets of cut points {1..n-1}."""
    out = []
    for mask in product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for bit in mask:
            if bit:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def rank1_zeta_values(q, g, coeffs, n_max):
    """vhat_1..vhat_{n_max} by direct evaluation."""
    def P(t):
        return sum(Fraction(c) * t**i for i, c in enumerate(coeffs))

    vals = {}
    acc = Fraction(1)
    for m in range(1, n_max + 1):
        t = Fraction(1, q**m)
        z = Fraction(q) ** (m * (g - 1)) * P(t) / (1 - t)
        if m > 1:
            z /= 1 - q * t
        acc *= z
        vals[m] = acc
    return vals


def composition_sum(q, vhat, n, weight=lambda parts: 1):
    """sum over compositions of n of prod vhat / prod (1 - q^{n_j+n_{j+1}}) * weight."""
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for parts in compositions_by_cuts(n):
        term = Fraction(1)
        for p in parts:
            term *= vhat[p]
        for x, y in zip(parts, parts[1:]):
            term /= 1 - Fraction(q) ** (x + y)
        total += term * weight(parts)
    return total


def alpha_nn_direct(q, N1, vhat, n):
    """Four-term genus-2 formula for alpha_n(n), written out term by term."""
    from math import comb

    if n == 1:
        return Fraction(N1)
    first = lambda parts: Fraction(q) ** (1 + parts[0])
    last = lambda parts: Fraction(1, q ** parts[-1])
    s = N1 * composition_sum(q, vhat, n - 1)
    s += composition_sum(q, vhat, n - 1, first)
    s -= composition_sum(q, vhat, n - 1, last)
    for a in range(2, n):
        s -= composition_sum(q, vhat, n - a, last) * composition_sum(q, vhat, a - 1)
    return Fraction(q) ** comb(n, 2) * s

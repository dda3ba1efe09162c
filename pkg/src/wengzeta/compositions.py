"""Weighted sums over ordered compositions.

Every closed formula in the package (semi-stable mass for any degree, the four
terms of the alpha_n(n) formula, the brackets of the special-uniformity
decomposition) is a sum of the shape

    sum over (n_1, ..., n_k) with n_1 + ... + n_k = n of
        sign(k) * prod_j vhat_{n_j} * prod_{j<k} q^{e_j} / D_j * boundary(n_1 or n_k)

with D_j = 1 - q^{n_j + n_{j+1}} ("absorbed") or q^{n_j + n_{j+1}} - 1 together
with sign (-1)^{k-1} ("alternating"), and e_j = (n_j + n_{j+1}) {d s_j / n}.
Two evaluators are provided: a brute-force walk over all 2^{n-1}
compositions and a dynamic program over (partial sum, last part).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .curve import CurveDatum, v_hat
from .rational import qpow

BOUNDARIES = ("none", "first", "last")
SIGN_MODES = ("absorbed", "alternating")


class Composition(tuple):
    """An ordered tuple of positive integers."""

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"not a composition: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    @property
    def total(self) -> int:
        return sum(self)


@dataclass(frozen=True)
class WeightSpec:
    """How each composition is weighted.

    ``boundary`` picks the part the boundary weight reads (first or last);
    the weight is ``q**(scale * part + offset)`` unless ``boundary_fn`` is
    given, in which case ``boundary_fn(part)`` is used verbatim.
    """

    boundary: str = "none"
    scale: int = 0
    offset: int = 0
    fractional_d: Optional[int] = None
    sign_mode: str = "absorbed"
    boundary_fn: Optional[Callable[[int], Fraction]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.boundary not in BOUNDARIES:
            raise ValueError(f"boundary must be one of {BOUNDARIES}")
        if self.sign_mode not in SIGN_MODES:
            raise ValueError(f"sign_mode must be one of {SIGN_MODES}")
        if self.sign_mode == "absorbed" and self.fractional_d:
            raise ValueError("fractional exponents need the alternating sign convention")
        if self.boundary == "none" and (self.scale or self.offset or self.boundary_fn):
            raise ValueError("boundary weight given but boundary='none'")

    @classmethod
    def first_exponent(cls, scale: int, offset: int = 0, **kw) -> "WeightSpec":
        return cls(boundary="first", scale=scale, offset=offset, **kw)

    @classmethod
    def last_exponent(cls, scale: int, offset: int = 0, **kw) -> "WeightSpec":
        return cls(boundary="last", scale=scale, offset=offset, **kw)

    def boundary_weight(self, q: int, part: int) -> Fraction:
        if self.boundary_fn is not None:
            return Fraction(self.boundary_fn(part))
        return qpow(q, self.scale * part + self.offset)

    def d_mod(self, n: int) -> int:
        return (self.fractional_d or 0) % n


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """All 2^{n-1} compositions of n, lexicographic."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def rec(remaining):
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in rec(remaining - first):
                yield (first,) + rest

    for parts in rec(n):
        yield Composition(parts)


def _adjacent_denominator(q: int, l: int, m: int, sign_mode: str) -> int:
    if sign_mode == "absorbed":
        return 1 - q ** (l + m)
    return q ** (l + m) - 1


def composition_term(C: CurveDatum, parts, w: WeightSpec) -> Fraction:
    """The summand of one composition."""
    q = C.q
    n = sum(parts)
    d = w.d_mod(n)
    k = len(parts)

    value = Fraction(1)
    for p in parts:
        value *= v_hat(C, p)
    exponent = Fraction(0)
    s = 0
    for j in range(k - 1):
        s += parts[j]
        value /= _adjacent_denominator(q, parts[j], parts[j + 1], w.sign_mode)
        if d:
            exponent += Fraction((parts[j] + parts[j + 1]) * (d * s % n), n)
    # single factors can be q^{2/3}; the product over j never is
    if exponent.denominator != 1 or exponent < 0:
        raise ArithmeticError(f"non-integral q-exponent {exponent} for composition {parts}")
    value *= q ** int(exponent)
    if w.sign_mode == "alternating" and k % 2 == 0:
        value = -value
    if w.boundary == "first":
        value *= w.boundary_weight(q, parts[0])
    elif w.boundary == "last":
        value *= w.boundary_weight(q, parts[-1])
    return value


def mass_sum_bruteforce(C: CurveDatum, n: int, w: WeightSpec = WeightSpec()) -> Fraction:
    return sum((composition_term(C, c, w) for c in enumerate_compositions(n)), Fraction(0))


def mass_sum_dp(C: CurveDatum, n: int, w: WeightSpec = WeightSpec()) -> Fraction:
    """Same sum as :func:`mass_sum_bruteforce`, in O(n^3) exact operations.

    ``table[S][l]`` holds the total over compositions of the prefix sum S whose
    last part is l. With a fractional degree the accumulated q-exponent of
    such a prefix is congruent to d*S*(S-l)/n mod 1, so the table stores the
    value divided by the state potential q^{((d S (S-l)) mod n)/n}; every
    transition then multiplies by an integral power of q.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    q = C.q
    d = w.d_mod(n)
    vh = [None] + [v_hat(C, m) for m in range(1, n + 1)]

    def potential(S, l):
        return d * S * (S - l) % n

    table = [dict() for _ in range(n + 1)]
    for l in range(1, n + 1):
        v = vh[l]
        if w.boundary == "first":
            v *= w.boundary_weight(q, l)
        table[l][l] = v

    step_sign = -1 if w.sign_mode == "alternating" else 1
    for S in range(1, n):
        for l, acc in table[S].items():
            frac = d * S % n
            for m in range(1, n - S + 1):
                factor = vh[m] / _adjacent_denominator(q, l, m, w.sign_mode)
                if d:
                    num = (l + m) * frac + potential(S, l) - potential(S + m, m)
                    if num % n:
                        raise ArithmeticError(f"non-integral q-exponent at state ({S}, {l}) -> {m}")
                    factor *= qpow(q, num // n)
                row = table[S + m]
                row[m] = row.get(m, 0) + step_sign * acc * factor

    total = Fraction(0)
    for l, acc in table[n].items():
        assert potential(n, l) == 0
        if w.boundary == "last":
            acc *= w.boundary_weight(q, l)
        total += acc
    return total


def weight_grid(n: int) -> list:
    """Every WeightSpec the package evaluates at total n (d in {0, 1, n-1})."""
    grid = [
        WeightSpec(),
        WeightSpec(sign_mode="alternating"),
        WeightSpec.first_exponent(1, 1),
        WeightSpec.last_exponent(-1),
    ]
    for d in sorted({1 % n, (n - 1) % n} - {0}):
        grid.append(WeightSpec(fractional_d=d, sign_mode="alternating"))
    return grid

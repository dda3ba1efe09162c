import math
import sys
from pathlib import Path

import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from wengzeta import fixtures
from wengzeta.curve import CurveDatum, validate_weil_datum

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9]


@pytest.fixture
def fixture_curve():
    return fixtures.FIXTURE


@pytest.fixture
def elliptic_q2():
    return fixtures.ELLIPTIC_Q2


@st.composite
def genus1_curves(draw):
    q = draw(st.sampled_from(PRIME_POWERS))
    bound = math.isqrt(4 * q)
    a = draw(st.integers(-bound, bound))
    return CurveDatum(q, 1, artin_coeffs=(1, a, q))


@st.composite
def genus2_curves(draw):
    """Symmetric integer quartics with every reciprocal root of norm sqrt(q).

    With x^2 - a x + (b - 2q) having both roots in [-2 sqrt q, 2 sqrt q], b is
    confined to [2|a| sqrt q - 2q, 2q + a^2/4], so it is drawn from that range.
    """
    q = draw(st.sampled_from(PRIME_POWERS[:5]))
    a = draw(st.integers(-math.isqrt(16 * q), math.isqrt(16 * q)))
    root = math.isqrt(4 * a * a * q)
    low = (root if root * root == 4 * a * a * q else root + 1) - 2 * q
    high = 2 * q + (a * a) // 4
    assume(low <= high)
    b = draw(st.integers(low, high))
    C = CurveDatum(q, 2, artin_coeffs=(1, a, b, a * q, q * q))
    assume(validate_weil_datum(C.artin, 30).ok)
    return C


def weil_curves():
    return st.one_of(genus1_curves(), genus2_curves())

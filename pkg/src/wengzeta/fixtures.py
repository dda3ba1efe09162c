"""Built-in curve data for selftest and the test-suite.

Odd-characteristic entries come from the listed hyperelliptic/Weierstrass
models y^2 = f(x) (coefficients low degree first). The q = 4 entries are
base changes of the q = 2 curves (N_k over F_4 is N_{2k} over F_2).
"""

from __future__ import annotations

from .curve import CurveDatum

FIXTURE = CurveDatum(2, 2, point_counts=(3, 9), name="fixture-g2-q2")
ELLIPTIC_Q2 = CurveDatum(2, 1, point_counts=(3,), name="y^2+y=x^3 / F_2")

# name -> (q, genus, point counts, model)
_TABLE = [
    ("g2-q3-a", 3, 2, (4, 14), (0, 1, 0, 0, 0, 1)),
    ("g2-q3-b", 3, 2, (4, 10), (1, 0, 0, 0, 0, 1)),
    ("g2-q5", 5, 2, (5, 35), (2, 0, 1, 0, 0, 1)),
    ("g2-q7", 7, 2, (10, 70), (3, 1, 0, 2, 0, 1)),
    ("g2-q4", 4, 2, (9, 25), None),
    ("g1-q3-a", 3, 1, (4,), (1, 1, 0, 1)),
    ("g1-q3-b", 3, 1, (1,), (2, 2, 0, 1)),
    ("g1-q5-a", 5, 1, (9,), (1, 1, 0, 1)),
    ("g1-q5-b", 5, 1, (4,), (0, 1, 0, 1)),
    ("g1-q7", 7, 1, (6,), (3, 2, 0, 1)),
    ("g1-q4", 4, 1, (9,), None),
]

MODELS = {name: model for name, _, _, _, model in _TABLE}

CURVES = {FIXTURE.name: FIXTURE, ELLIPTIC_Q2.name: ELLIPTIC_Q2}
CURVES.update(
    {name: CurveDatum(q, g, point_counts=N, name=name) for name, q, g, N, _ in _TABLE}
)

GENUS1 = [c for c in CURVES.values() if c.genus == 1]
GENUS2 = [c for c in CURVES.values() if c.genus == 2]


def get(name: str) -> CurveDatum:
    try:
        return CURVES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(CURVES)}") from None

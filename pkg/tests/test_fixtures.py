import pytest

from pointcount import count_points, is_squarefree
from wengzeta import fixtures
from wengzeta.curve import validate_weil_datum

MODELLED = [name for name, model in fixtures.MODELS.items() if model is not None]


@pytest.mark.parametrize("name", MODELLED)
def test_point_counts_match_model(name):
    C = fixtures.get(name)
    f = fixtures.MODELS[name]
    assert is_squarefree(list(f), C.q)
    N1, N2 = count_points(C.q, f)
    assert N1 == C.N(1)
    if C.genus == 2:
        assert N2 == C.N(2)
    else:
        # genus 1 stores only N_1; N_2 follows from the Weil polynomial
        assert C.N(2) == N2


@pytest.mark.parametrize(
    "extension, base",
    [("g2-q4", fixtures.FIXTURE), ("g1-q4", fixtures.ELLIPTIC_Q2)],
)
def test_base_change(extension, base):
    C = fixtures.get(extension)
    for k in (1, 2, 3):
        assert C.N(k) == base.N(2 * k)


@pytest.mark.parametrize("name", sorted(fixtures.CURVES))
def test_fixtures_are_valid_weil_data(name):
    assert validate_weil_datum(fixtures.get(name).artin).ok


def test_mix_of_genera_and_fields():
    assert len(fixtures.GENUS1) >= 3 and len(fixtures.GENUS2) >= 3
    assert {C.q for C in fixtures.CURVES.values()} >= {2, 3, 4, 5}


def test_unknown_fixture():
    with pytest.raises(KeyError, match="known"):
        fixtures.get("missing")

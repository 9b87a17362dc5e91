import warnings

import pytest
from hypothesis import given, strategies as st

from symprod.curves import (
    CurveProfile,
    brill_noether_rho,
    clifford_max_dim,
    generic_gonality,
    generic_min_degree,
    generic_min_degree_scan,
    geometric_rr,
    martens_bound,
)
from symprod.errors import AdvisoryWarning, BadParams, InconsistentProfile


def test_rho_examples():
    assert brill_noether_rho(7, 0, 5) == 5
    assert brill_noether_rho(4, 1, 3) == 0
    assert brill_noether_rho(6, 2, 6) == 0
    assert brill_noether_rho(6, 2, 5) == -3
    with pytest.raises(BadParams):
        brill_noether_rho(-1, 1, 1)


def test_min_degree_examples():
    assert generic_min_degree(5, 1) == 4
    assert generic_min_degree(6, 2) == 6
    assert generic_min_degree(6, 3) == 8
    assert all(generic_min_degree(g, 1) == (g + 3) // 2 for g in range(1, 50))
    with pytest.raises(BadParams):
        generic_min_degree(0, 1)


def test_min_degree_matches_scan():
    for g in range(1, 61):
        for r in range(1, 6):
            assert generic_min_degree(g, r) == generic_min_degree_scan(g, r)


def test_scan_range_covers_large_r():
    # for r > g the minimum exceeds 2g, so the scan must run past it
    assert generic_min_degree_scan(1, 5) == 6 > 2 * 1


def test_gonality_examples():
    assert [generic_gonality(g) for g in range(8)] == [1, 2, 2, 3, 3, 4, 4, 5]
    assert all(generic_gonality(g) == generic_min_degree(g, 1) for g in range(2, 80))


@given(st.integers(0, 200), st.integers(0, 20), st.integers(0, 300))
def test_rho_is_affine_in_degree(g, r, d):
    assert brill_noether_rho(g, r, d + 1) - brill_noether_rho(g, r, d) == r + 1


def test_clifford_examples():
    assert clifford_max_dim(0) == (0, "zero")
    assert clifford_max_dim(10, g=6) == (5, "canonical")
    assert clifford_max_dim(5) == (2, None)
    assert clifford_max_dim(4, g=6).boundary == "hyperelliptic"
    with pytest.raises(BadParams):
        clifford_max_dim(12, g=6)


def test_martens_examples():
    assert martens_bound(5, 2) == 0
    assert martens_bound(6, 2) == 1
    assert martens_bound(4, 2) == -1


def test_martens_advisory():
    with pytest.warns(AdvisoryWarning):
        martens_bound(5, 1, g=4)
    with pytest.warns(AdvisoryWarning):
        martens_bound(5, 1, g=9, hyperelliptic=True)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        martens_bound(5, 1, g=9, hyperelliptic=False)


def test_martens_never_contradicts_brill_noether():
    # on a very general curve dim W^r_m = rho; Martens' range is 2 <= m <= g-1, 0 < 2r <= m
    for g in range(5, 21):
        for m in range(2, g):
            for r in range(1, m // 2 + 1):
                rho = brill_noether_rho(g, r, m)
                if rho >= 0:
                    assert rho <= martens_bound(m, r)


def test_geometric_rr_examples():
    d = 7
    assert geometric_rr(2 * d, d - 1) == d
    assert geometric_rr(9, 8) == 0
    assert geometric_rr(6, 2) == 3
    with pytest.raises(BadParams):
        geometric_rr(3, 3)


def test_profile_normalisation():
    assert CurveProfile(2).curve_class == "hyperelliptic"
    assert CurveProfile(2, "very_general").known_gonality == 2
    with pytest.raises(InconsistentProfile):
        CurveProfile(2, "non_hyperelliptic")


@pytest.mark.parametrize("kwargs", [
    dict(genus=5, curve_class="hyperelliptic", gonality=3),
    dict(genus=1, curve_class="hyperelliptic"),
    dict(genus=6, curve_class="very_general", gonality=3),
    dict(genus=6, curve_class="very_general", delta={2: 7}),
    dict(genus=6, curve_class="non_hyperelliptic", gonality=2),
    dict(genus=6, gonality=5),
    dict(genus=6, gonality=3, delta={1: 4}),
    dict(genus=6, delta={4: 3}),
    dict(genus=-1),
    dict(genus=4, curve_class="generic"),
])
def test_inconsistent_profiles(kwargs):
    with pytest.raises(InconsistentProfile):
        CurveProfile(**kwargs)


def test_known_delta():
    assert CurveProfile(6, "very_general").known_delta() == {1: 4, 2: 6, 3: 8}
    assert CurveProfile(6).known_delta() == {}
    assert CurveProfile(6, gonality=3, delta={3: 7}).known_delta() == {1: 3, 3: 7}
    assert CurveProfile(1).known_gonality == 2

from math import comb

import pytest

from symprod.curves import CurveProfile, generic_gonality, generic_min_degree
from symprod.errors import BadParams, InconsistentProfile, MissingGonality
from symprod.irrationality import (
    BoundInterval,
    cover_upper_bound,
    deg_gonality,
    degirr_interval,
    degirr_kfold_lower,
    moving_gonality_lower,
)


def interval(b):
    return (b.lo, b.hi, b.exact)


def test_degirr_examples():
    assert interval(degirr_interval(CurveProfile(0))) == (1, 1, True)
    assert interval(degirr_interval(CurveProfile(1))) == (2, 2, True)
    assert interval(degirr_interval(CurveProfile(9, "hyperelliptic"))) == (4, 4, True)
    assert interval(degirr_interval(CurveProfile(6, "very_general"))) == (5, 15, False)


def test_degirr_g6_upper_terms():
    # 4^2 = 16, C(6, 2) = 15, C(7, 2) - 6 = 15
    b = degirr_interval(CurveProfile(6, "very_general"))
    assert set(b.provenance) >= {"hi:plane-model-secants", "hi:space-model-projection"}
    assert "hi:product-of-pencils" not in b.provenance


@pytest.mark.parametrize("g", [2, 3])
def test_low_genus_hyperelliptic_is_open(g):
    b = degirr_interval(CurveProfile(g, "hyperelliptic"))
    assert interval(b) == (3, 4, False)
    assert any("open" in n for n in b.notes)


def test_arbitrary_profile_has_no_upper_bound():
    b = degirr_interval(CurveProfile(8))
    assert b.hi is None and b.lo == 3 and 10**6 in b


def test_non_hyperelliptic_table():
    assert [degirr_interval(CurveProfile(g, "non_hyperelliptic")).lo for g in range(3, 9)] == [3, 3, 4, 5, 6, 6]
    assert degirr_interval(CurveProfile(12, "non_hyperelliptic", gonality=7)).lo == 7


def test_very_general_bounds():
    for g in range(4, 13):
        b = degirr_interval(CurveProfile(g, "very_general"))
        assert b.lo == g - 1
        d1, d2, d3 = generic_gonality(g), generic_min_degree(g, 2), generic_min_degree(g, 3)
        assert b.hi == min(d1 * d1, d2 * (d2 - 1) // 2, (d3 - 1) * (d3 - 2) // 2 - g)


def test_very_general_monotone_and_consistent():
    prev = 0
    for g in range(4, 41):
        b = degirr_interval(CurveProfile(g, "very_general"))
        assert b.lo >= prev
        assert b.hi >= b.lo
        prev = b.lo


def test_intervals_are_well_formed():
    for g in range(0, 30):
        for cls in ("very_general", "hyperelliptic", "non_hyperelliptic", "arbitrary"):
            try:
                p = CurveProfile(g, cls)
            except InconsistentProfile:
                continue
            b = degirr_interval(p)
            assert b.hi is None or b.lo <= b.hi
            if b.exact:
                assert b.hi == b.lo
                assert any(t.startswith("eq:") for t in b.provenance)


def test_conjecture_is_a_note_only():
    b = degirr_interval(CurveProfile(10, "very_general"))
    d2 = generic_min_degree(10, 2)
    assert any(str(comb(d2, 2)) in n for n in b.notes)
    assert b.lo == 9


def test_bielliptic_upper_bound():
    for d in range(2, 6):
        g = 2 * d * d + 2
        assert cover_upper_bound(g, d) == 2 * d * d < g - 1
        b = degirr_interval(CurveProfile(g, "non_hyperelliptic", elliptic_cover_degree=d))
        assert b.hi == 2 * d * d and "hi:elliptic-cover" in b.provenance
        assert cover_upper_bound(3 * d * d + 2, d, target_genus=2) == 3 * d * d < 3 * d * d + 1
    with pytest.raises(BadParams):
        cover_upper_bound(9, 2)


def test_supplied_data_below_lower_bound_is_inconsistent():
    with pytest.raises(InconsistentProfile):
        degirr_interval(CurveProfile(10, "non_hyperelliptic", delta={2: 3}))


def test_kfold_lower():
    assert degirr_kfold_lower(2, 2) == 3
    assert degirr_kfold_lower(5, 3) == 4
    assert degirr_kfold_lower(9, 5) == 6
    with pytest.raises(BadParams):
        degirr_kfold_lower(2, 3)


def test_deg_gonality_examples():
    assert interval(deg_gonality(CurveProfile(2), 2)) == (2, 2, True)
    assert interval(deg_gonality(CurveProfile(3, "very_general"))) == (3, 3, True)
    assert interval(deg_gonality(CurveProfile(5, "very_general"), 7)) == (1, 1, True)
    assert interval(deg_gonality(CurveProfile(0))) == (1, 1, True)
    assert interval(deg_gonality(CurveProfile(8, "very_general"), 4)) == (1, 5, False)
    with pytest.raises(MissingGonality):
        deg_gonality(CurveProfile(5))
    with pytest.raises(BadParams):
        deg_gonality(CurveProfile(5), 1)


def test_deg_gonality_generic():
    for g in range(3, 40):
        b = deg_gonality(CurveProfile(g, "very_general"))
        assert b.exact and b.lo == generic_gonality(g)


def test_moving_gonality_examples():
    assert moving_gonality_lower(CurveProfile(6, "very_general"))[:2] == (4, True)
    assert moving_gonality_lower(CurveProfile(3, "very_general"))[:2] == (3, False)
    assert moving_gonality_lower(CurveProfile(4, "hyperelliptic"))[:2] == (2, False)
    assert not moving_gonality_lower(CurveProfile(7, gonality=4)).rigidity_applicable
    assert moving_gonality_lower(CurveProfile(7, gonality=4), trivial_automorphisms=True).rigidity_applicable
    with pytest.raises(MissingGonality):
        moving_gonality_lower(CurveProfile(7))


def test_bound_interval_invariants():
    with pytest.raises(InconsistentProfile):
        BoundInterval(5, 4, False)
    with pytest.raises(ValueError):
        BoundInterval(3, 4, True)
    assert 4 in BoundInterval(3, 4, False) and 5 not in BoundInterval(3, 4, False)

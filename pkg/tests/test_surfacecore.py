"""Weight budget, signatures, and the map validator."""

import pytest
from hypothesis import given, strategies as st

from wptrans.surfacecore import (
    FuchsianSignature,
    MapValidation,
    RegularMapDescriptor,
    WeightDistribution,
    double_cover_genus,
    hyperelliptic_signature,
    rh_area_consistency,
    total_weight,
    validate_map,
    weierstrass_count_bounds,
)


def test_total_weight_values():
    assert total_weight(1) == 0
    assert total_weight(2) == 6
    assert total_weight(3) == 24
    assert total_weight(14) == 2730


def test_total_weight_rejects_genus_zero():
    with pytest.raises(ValueError):
        total_weight(0)
    with pytest.raises(ValueError):
        total_weight(True)


def test_count_bounds():
    assert weierstrass_count_bounds(2) == (6, 6)
    assert weierstrass_count_bounds(3) == (8, 24)
    with pytest.raises(ValueError):
        weierstrass_count_bounds(1)


@given(st.integers(min_value=2, max_value=500))
def test_hyperelliptic_budget_identity(g):
    # 2g+2 branch points of weight g(g-1)/2 exhaust the total
    assert (2 * g + 2) * (g * (g - 1) // 2) == total_weight(g)


def test_double_cover_genus():
    assert double_cover_genus(2) == 0
    assert double_cover_genus(4) == 1
    assert double_cover_genus(6) == 2
    assert double_cover_genus(30) == 14
    for bad in (5, 1, 0, -2, 2.0):
        with pytest.raises(ValueError):
            double_cover_genus(bad)


def test_signature_sorts_periods_and_validates():
    sig = FuchsianSignature(0, (7, 2, 3))
    assert sig.periods == (2, 3, 7)
    assert sig.mu() * 42 == 1
    assert sig.is_cocompact_hyperbolic()
    with pytest.raises(ValueError):
        FuchsianSignature(0, (1, 2))
    with pytest.raises(ValueError):
        FuchsianSignature(-1, (2, 2))


def test_sphere_signatures_are_not_hyperbolic():
    assert not FuchsianSignature(0, (2, 3)).is_cocompact_hyperbolic()
    assert not FuchsianSignature(0, (2, 2, 2, 2)).is_cocompact_hyperbolic()  # mu = 0
    assert FuchsianSignature(1, (2,)).is_cocompact_hyperbolic()


def test_hyperelliptic_signature():
    assert hyperelliptic_signature(2) == FuchsianSignature(0, (2,) * 6)
    assert hyperelliptic_signature(1).mu() == 0


def test_rh_area_consistency():
    triangle = FuchsianSignature(0, (2, 3, 7))
    assert rh_area_consistency(triangle, 168, 3)
    assert not rh_area_consistency(triangle, 167, 3)
    with pytest.raises(ValueError):
        rh_area_consistency(hyperelliptic_signature(1), 2, 1)  # mu = 0
    with pytest.raises(ValueError):
        rh_area_consistency(triangle, 0, 3)


def test_validate_map_accepts_klein():
    klein = RegularMapDescriptor(
        face_valency=3, vertex_valency=7, V=24, E=84, F=56, genus=3)
    result = validate_map(klein)
    assert isinstance(result, MapValidation)
    assert result.status == "valid"
    assert result.ok
    assert result.problems == ()


def test_validate_map_normalizes_swapped_valencies():
    # the same {3,10} data in both orientations; only one satisfies the
    # dart identities, the other is repaired with status "normalized"
    straight = RegularMapDescriptor(
        face_valency=3, vertex_valency=10, V=24, E=120, F=80, genus=9)
    crossed = RegularMapDescriptor(
        face_valency=10, vertex_valency=3, V=24, E=120, F=80, genus=9)
    assert validate_map(straight).status == "valid"
    normalized = validate_map(crossed)
    assert normalized.status == "normalized"
    assert normalized.descriptor.type_pair == (3, 10)
    assert normalized.problems


def test_validate_map_rejects_broken_data():
    broken = RegularMapDescriptor(
        face_valency=3, vertex_valency=7, V=24, E=83, F=56, genus=3)
    result = validate_map(broken)
    assert result.status == "invalid"
    assert not result.ok
    assert result.problems


def test_descriptor_rejects_nonpositive_counts():
    with pytest.raises(ValueError):
        RegularMapDescriptor(face_valency=3, vertex_valency=7,
                             V=0, E=84, F=56, genus=3)
    with pytest.raises(ValueError):
        RegularMapDescriptor(face_valency=3, vertex_valency=7,
                             V=24, E=84, F=56, genus=-1)


def test_weight_distribution_budget():
    dist = WeightDistribution(3, (("branch", 8, 3),), complete=True)
    assert dist.weighted_sum() == 24
    partial = WeightDistribution(3, (("vertices", 4, 2),), complete=False)
    assert partial.weighted_sum() == 8
    with pytest.raises(ValueError):
        WeightDistribution(3, (("too heavy", 9, 3),), complete=False)
    with pytest.raises(ValueError):
        WeightDistribution(3, (("incomplete", 4, 2),), complete=True)
    with pytest.raises(ValueError):
        WeightDistribution(3, (("negative", 4, -1),), complete=False)

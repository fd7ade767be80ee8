import math

import pytest
from hypothesis import given, strategies as st

from scrkit.geometry import (
    ChordGeometry,
    ModuleSpec,
    annulus_quarter_area,
    bend_angle_equal_radii,
    bend_angle_unequal_radii,
    fringe_base,
    fringe_count,
    triangular_fringe_area,
)


def test_annulus_quarter_area_reference_band():
    # pi * (0.055^2 - 0.025^2) / 4
    assert annulus_quarter_area(0.055, 0.025) == pytest.approx(0.0018849555921538756, rel=1e-12)


def test_annulus_quarter_area_rejects_zero_width_band():
    with pytest.raises(ValueError):
        annulus_quarter_area(1.0, 1.0)


def test_annulus_quarter_area_rejects_nonpositive_inner_radius():
    # r -> 0 would tend to the quarter disc pi*R^2/4, but r = 0 is rejected
    with pytest.raises(ValueError):
        annulus_quarter_area(2.0, 0.0)


def test_triangular_fringe_area_values():
    assert triangular_fringe_area(5, 0.020, 0.030) == pytest.approx(0.0015, rel=1e-12)
    assert triangular_fringe_area(1, 2.0, 1.0) == pytest.approx(1.0, rel=1e-12)
    assert triangular_fringe_area(6, 0.020, 0.030) == pytest.approx(0.0018, rel=1e-12)


def test_triangular_fringe_area_rejects_bad_count():
    with pytest.raises(ValueError):
        triangular_fringe_area(0, 0.02, 0.03)


def test_fringe_count_reference_band_is_two_pi():
    assert fringe_count(0.055, 0.025, 0.020, 0.030) == pytest.approx(2.0 * math.pi, rel=1e-12)


def test_fringe_count_vanishes_with_the_band():
    assert fringe_count(0.025 + 1e-12, 0.025, 0.02, 0.03) == pytest.approx(0.0, abs=1e-6)


def test_fringe_count_rejects_inverted_band():
    with pytest.raises(ValueError):
        fringe_count(0.025, 0.055, 0.02, 0.03)


@given(
    r=st.floats(0.001, 1.0),
    band=st.floats(0.001, 1.0),
    b=st.floats(0.001, 1.0),
    h=st.floats(0.001, 1.0),
)
def test_fringe_count_times_unit_triangle_area_recovers_band_area(r, band, b, h):
    R = r + band
    lhs = fringe_count(R, r, b, h) * triangular_fringe_area(1, b, h)
    rhs = annulus_quarter_area(R, r)
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_fringe_base_values():
    assert fringe_base(0.100, 5) == pytest.approx(0.020, rel=1e-12)
    assert fringe_base(0.100, 1) == pytest.approx(0.100, rel=1e-12)
    assert fringe_base(0.100, 4) == pytest.approx(0.025, rel=1e-12)
    with pytest.raises(ValueError):
        fringe_base(0.1, 0)


def test_bend_angle_equal_radii_values():
    r = 0.025
    assert bend_angle_equal_radii(ChordGeometry(0.0, r, r)) == 0.0
    assert bend_angle_equal_radii(
        ChordGeometry(r * math.sqrt(2.0), r, r)
    ) == pytest.approx(math.pi / 2.0, rel=1e-12)
    assert bend_angle_equal_radii(ChordGeometry(2.0 * r, r, r)) == pytest.approx(
        math.pi, rel=1e-12
    )


def test_bend_angle_equal_radii_rejects_chord_beyond_diameter():
    with pytest.raises(ValueError):
        bend_angle_equal_radii(ChordGeometry(0.051, 0.025, 0.025))


def test_bend_angle_equal_radii_requires_equal_radii():
    with pytest.raises(ValueError):
        bend_angle_equal_radii(ChordGeometry(0.01, 0.025, 0.030))


def test_bend_angle_equal_radii_quarter_turn_for_random_radii():
    # chord = r*sqrt(2) always subtends a quarter turn
    import random

    rng = random.Random(7)
    for _ in range(100):
        r = rng.uniform(1e-6, 1.0)
        angle = bend_angle_equal_radii(ChordGeometry(r * math.sqrt(2.0), r, r))
        assert angle == pytest.approx(math.pi / 2.0, rel=1e-12)


@given(r=st.floats(0.01, 10.0), data=st.data())
def test_bend_angle_equal_radii_monotone_in_chord(r, data):
    c1 = data.draw(st.floats(0.0, 2.0 * r * 0.999))
    c2 = data.draw(st.floats(c1, 2.0 * r * 0.999))
    a1 = bend_angle_equal_radii(ChordGeometry(c1, r, r))
    a2 = bend_angle_equal_radii(ChordGeometry(c2, r, r))
    assert a2 >= a1
    if c2 - c1 > 1e-9 * r:  # strictly increasing once the gap is macroscopic
        assert a2 > a1


def test_bend_angle_unequal_radii_values():
    assert bend_angle_unequal_radii(ChordGeometry(0.0, 0.3, 0.4)) == 0.0
    # with unit radii this form halves the equal-radii denominator:
    # 2*asin(0.5) = pi/3, not 2*asin(0.25)
    assert bend_angle_unequal_radii(ChordGeometry(0.5, 1.0, 1.0)) == pytest.approx(
        math.pi / 3.0, rel=1e-12
    )


def test_bend_angle_unequal_radii_rejects_arcsin_overflow():
    with pytest.raises(ValueError):
        bend_angle_unequal_radii(ChordGeometry(2.0, 1.0, 1.0))


def test_chord_geometry_validation():
    with pytest.raises(ValueError):
        ChordGeometry(-0.01, 1.0, 1.0)
    with pytest.raises(ValueError):
        ChordGeometry(0.01, 0.0, 1.0)


def _spec_kwargs(**overrides):
    kwargs = dict(
        length_L=0.100,
        width_W=0.090,
        thickness_T=0.045,
        fringe_base_b=0.020,
        fringe_height_h=0.030,
        inner_radius_r=0.025,
        outer_radius_R=0.055,
        fringe_count_N=5,
        turn_angle_theta=math.pi / 2.0,
    )
    kwargs.update(overrides)
    return kwargs


def test_module_spec_accepts_consistent_dimensions():
    module = ModuleSpec(**_spec_kwargs())
    assert module.outer_radius_R == module.inner_radius_r + module.fringe_height_h


def test_module_spec_rejects_radius_sum_violation():
    with pytest.raises(ValueError):
        ModuleSpec(**_spec_kwargs(outer_radius_R=0.056))


def test_module_spec_rejects_base_violation():
    with pytest.raises(ValueError):
        ModuleSpec(**_spec_kwargs(fringe_base_b=0.021))


def test_module_spec_tolerates_tiny_rounding():
    ModuleSpec(**_spec_kwargs(outer_radius_R=0.055 * (1.0 + 1e-12)))


def test_module_spec_rejects_nonpositive_lengths_and_bad_theta():
    with pytest.raises(ValueError):
        ModuleSpec(**_spec_kwargs(width_W=0.0))
    with pytest.raises(ValueError):
        ModuleSpec(**_spec_kwargs(turn_angle_theta=3.2))
    with pytest.raises(ValueError):
        ModuleSpec(**_spec_kwargs(turn_angle_theta=-0.1))

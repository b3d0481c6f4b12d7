import pytest
from hypothesis import given
from hypothesis import strategies as st

from facerange import (
    CenterPosition,
    DisplayDecision,
    DomainError,
    FontPolicy,
    UserPosition,
    ViewerSet,
    apply_hysteresis,
    compute_center,
    font_size_for,
)

POLICY = FontPolicy()  # (20,12) (40,18) (60,26) (80,36)


def at(distance):
    return CenterPosition(distance=distance, bearing=0.0)


def policies():
    @st.composite
    def build(draw):
        n = draw(st.integers(2, 6))
        d_steps = draw(st.lists(st.floats(1.0, 30.0), min_size=n, max_size=n))
        s_steps = draw(st.lists(st.floats(0.5, 10.0), min_size=n, max_size=n))
        d = s = 10.0
        bps = []
        for dd, ds in zip(d_steps, s_steps):
            bps.append((d, s))
            d += dd
            s += ds
        return FontPolicy(breakpoints=tuple(bps))

    return build()


class TestFontSizeFor:
    def test_below_first_breakpoint_clamps(self):
        assert font_size_for(at(5.0), POLICY) == 12.0

    def test_above_last_breakpoint_clamps(self):
        assert font_size_for(at(300.0), POLICY) == 36.0

    def test_breakpoints_are_interpolation_knots(self):
        for d, s in POLICY.breakpoints:
            assert font_size_for(at(d), POLICY) == s

    def test_two_point_policy_interpolates_linearly(self):
        # hand oracle: halfway between (20,12) and (80,36) is 24 pt
        policy = FontPolicy(breakpoints=((20.0, 12.0), (80.0, 36.0)))
        assert font_size_for(at(50.0), policy) == 24.0

    def test_explicit_size_limits_must_bound_the_breakpoints(self):
        policy = FontPolicy(
            breakpoints=((20.0, 12.0), (80.0, 36.0)), min_size=10.0, max_size=40.0
        )
        assert font_size_for(at(1.0), policy) == 12.0
        assert font_size_for(at(200.0), policy) == 36.0
        with pytest.raises(DomainError):
            FontPolicy(breakpoints=((20.0, 12.0), (80.0, 36.0)), min_size=14.0, max_size=30.0)

    @given(policy=policies(), d1=st.floats(0.0, 400.0), d2=st.floats(0.0, 400.0))
    def test_monotone_in_distance(self, policy, d1, d2):
        lo, hi = sorted((d1, d2))
        lo_c = CenterPosition(lo, 0.0)
        hi_c = CenterPosition(hi, 0.0)
        assert font_size_for(lo_c, policy) <= font_size_for(hi_c, policy)

    @given(policy=policies(), d=st.floats(0.0, 400.0))
    def test_result_respects_the_size_limits(self, policy, d):
        size = font_size_for(CenterPosition(d, 0.0), policy)
        assert policy.min_size <= size <= policy.max_size


class TestFontPolicyValidation:
    def test_needs_two_breakpoints(self):
        with pytest.raises(DomainError):
            FontPolicy(breakpoints=((20.0, 12.0),))

    def test_distances_must_increase(self):
        with pytest.raises(DomainError):
            FontPolicy(breakpoints=((40.0, 12.0), (20.0, 18.0)))

    def test_sizes_must_increase(self):
        with pytest.raises(DomainError):
            FontPolicy(breakpoints=((20.0, 18.0), (40.0, 12.0)))

    def test_breakpoint_sizes_must_fit_the_limits(self):
        with pytest.raises(DomainError):
            FontPolicy(breakpoints=((20.0, 12.0), (40.0, 18.0)), max_size=15.0, min_size=1.0)


class TestApplyHysteresis:
    def test_inside_band_keeps_previous(self):
        previous = DisplayDecision(font_size=24.0)
        decision = apply_hysteresis(previous, 24.5, band=1.0)
        assert decision.font_size == 24.0
        assert decision.hysteresis_applied is True

    def test_outside_band_adopts_candidate(self):
        previous = DisplayDecision(font_size=24.0)
        decision = apply_hysteresis(previous, 30.0, band=1.0)
        assert decision.font_size == 30.0
        assert decision.hysteresis_applied is False

    def test_without_previous_adopts_candidate(self):
        decision = apply_hysteresis(None, 18.0, band=1.0)
        assert decision.font_size == 18.0
        assert decision.hysteresis_applied is False

    def test_negative_band_rejected(self):
        with pytest.raises(DomainError):
            apply_hysteresis(None, 18.0, band=-0.5)

    @given(
        previous_size=st.one_of(st.none(), st.floats(5.0, 60.0)),
        candidate=st.floats(5.0, 60.0),
        band=st.floats(0.0, 5.0),
    )
    def test_idempotent(self, previous_size, candidate, band):
        previous = None if previous_size is None else DisplayDecision(font_size=previous_size)
        once = apply_hysteresis(previous, candidate, band)
        twice = apply_hysteresis(once, candidate, band)
        assert twice == once


class TestMultiUserBalance:
    @given(
        d1=st.floats(25.0, 75.0),
        d2=st.floats(25.0, 75.0),
        bearing=st.floats(-0.4, 0.4),
    )
    def test_center_size_lies_between_single_viewer_sizes(self, d1, d2, bearing):
        # along a shared bearing the center distance is the mean, so its
        # size is bracketed by the two single-viewer sizes
        center = compute_center(
            ViewerSet([UserPosition(d1, bearing), UserPosition(d2, bearing)])
        )
        size_center = font_size_for(center, POLICY)
        size_1 = font_size_for(at(d1), POLICY)
        size_2 = font_size_for(at(d2), POLICY)
        lo, hi = sorted((size_1, size_2))
        assert lo - 1e-9 <= size_center <= hi + 1e-9

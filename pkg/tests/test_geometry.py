import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from facerange import (
    CameraIntrinsics,
    DomainError,
    EyeObservation,
    InterpupillaryDistance,
    UserPosition,
    angular_fraction,
    estimate_distance,
    project_eye_distance,
)

CAM = CameraIntrinsics(fov_h=1.0, frame_width=1000.0)
IPD = InterpupillaryDistance(6.3)

# Reference values evaluated with 40-digit arithmetic (mpmath), recorded here
# as test constants:
#   6.3 / (2*tan(1.0*100/(2*1000)))  = 62.947491247916145702...
#   (2*1000/1.0) * atan(6.3/(2*50))  = 125.83369785265709699...
DISTANCE_AT_E100 = 62.947491247916146
SPAN_AT_D50 = 125.8336978526571


def cameras(min_fov=0.3, max_fov=2.5):
    return st.builds(
        CameraIntrinsics,
        fov_h=st.floats(min_fov, max_fov),
        frame_width=st.floats(100.0, 4000.0),
    )


class TestEstimateDistance:
    def test_matches_high_precision_reference(self):
        d = estimate_distance(EyeObservation(100.0), CAM, IPD)
        assert math.isclose(d, DISTANCE_AT_E100, rel_tol=1e-14)

    def test_round_trips_a_projected_span(self):
        span = project_eye_distance(50.0, CAM, IPD)
        d = estimate_distance(EyeObservation(span), CAM, IPD)
        assert abs(d - 50.0) / 50.0 < 1e-9

    def test_zero_span_is_rejected(self):
        with pytest.raises(DomainError):
            EyeObservation(0.0)

    def test_negative_span_is_rejected(self):
        with pytest.raises(DomainError):
            EyeObservation(-5.0)

    def test_half_angle_at_or_beyond_quarter_turn_is_rejected(self):
        cam = CameraIntrinsics(fov_h=3.0, frame_width=100.0)
        with pytest.raises(DomainError):
            estimate_distance(EyeObservation(110.0), cam, IPD)

    @given(
        cam=cameras(),
        ipd=st.floats(4.0, 8.0),
        span=st.floats(1.0, 999.0),
        factor=st.floats(1.001, 5.0),
    )
    def test_strictly_decreasing_in_span(self, cam, ipd, span, factor):
        wide = span * factor
        assume(wide <= cam.frame_width)
        ipd = InterpupillaryDistance(ipd)
        d_narrow = estimate_distance(EyeObservation(span), cam, ipd)
        d_wide = estimate_distance(EyeObservation(wide), cam, ipd)
        assert d_wide < d_narrow

    @given(cam=cameras(), span=st.floats(10.0, 500.0), scale=st.floats(1.001, 2.0))
    def test_strictly_increasing_in_ipd(self, cam, span, scale):
        assume(span <= cam.frame_width)
        d_small = estimate_distance(EyeObservation(span), cam, InterpupillaryDistance(5.0))
        d_large = estimate_distance(EyeObservation(span), cam, InterpupillaryDistance(5.0 * scale))
        assert d_large > d_small

    @given(cam=cameras(max_fov=2.0), frac=st.floats(1e-4, 0.0499))
    def test_small_spans_agree_with_linearized_model(self, cam, frac):
        span = frac * cam.frame_width
        exact = estimate_distance(EyeObservation(span), cam, IPD)
        linear = IPD.value * cam.frame_width / (cam.fov_h * span)
        assert abs(exact - linear) / exact < 0.002


class TestProjectEyeDistance:
    def test_matches_high_precision_reference(self):
        span = project_eye_distance(50.0, CAM, IPD)
        assert math.isclose(span, SPAN_AT_D50, rel_tol=1e-14)

    def test_vanishes_at_infinity(self):
        assert project_eye_distance(1e9, CAM, IPD) < 1e-4

    def test_too_close_overflows_the_frame(self):
        with pytest.raises(DomainError):
            project_eye_distance(0.5, CAM, IPD)

    def test_nonpositive_distance_is_rejected(self):
        with pytest.raises(DomainError):
            project_eye_distance(0.0, CAM, IPD)

    def test_round_trip_on_ten_thousand_random_distances(self):
        rng = np.random.default_rng(2024)
        for d in rng.uniform(10.0, 200.0, size=10_000):
            span = project_eye_distance(float(d), CAM, IPD)
            back = estimate_distance(EyeObservation(span), CAM, IPD)
            assert abs(back - d) / d < 1e-9

    @given(
        cam=cameras(min_fov=0.7, max_fov=1.5),
        ipd=st.floats(5.0, 7.5),
        distance=st.floats(10.0, 200.0),
    )
    def test_round_trip_identity(self, cam, ipd, distance):
        ipd = InterpupillaryDistance(ipd)
        span = project_eye_distance(distance, cam, ipd)
        back = estimate_distance(EyeObservation(span), cam, ipd)
        assert abs(back - distance) / distance < 1e-9


class TestAngularFraction:
    def test_full_frame_is_one(self):
        assert angular_fraction(EyeObservation(1000.0), CAM) == 1.0

    def test_quarter_frame(self):
        assert angular_fraction(EyeObservation(250.0), CAM) == 0.25

    def test_wider_than_frame_is_rejected(self):
        with pytest.raises(DomainError):
            angular_fraction(EyeObservation(1001.0), CAM)

    @given(cam=cameras(), span=st.floats(0.1, 4000.0))
    def test_is_exactly_the_pixel_ratio(self, cam, span):
        assume(span <= cam.frame_width)
        assert angular_fraction(EyeObservation(span), cam) == span / cam.frame_width


class TestDomainTypes:
    @pytest.mark.parametrize("fov", [0.0, -1.0, math.pi, 4.0])
    def test_bad_fov_rejected(self, fov):
        with pytest.raises(DomainError):
            CameraIntrinsics(fov_h=fov, frame_width=1000.0)

    def test_bad_frame_width_rejected(self):
        with pytest.raises(DomainError):
            CameraIntrinsics(fov_h=1.0, frame_width=0.0)

    def test_bad_ipd_rejected(self):
        with pytest.raises(DomainError):
            InterpupillaryDistance(0.0)

    def test_position_requires_positive_distance(self):
        with pytest.raises(DomainError):
            UserPosition(distance=0.0, bearing=0.0)

    def test_position_bearing_range(self):
        UserPosition(distance=1.0, bearing=math.pi)  # inclusive upper end
        with pytest.raises(DomainError):
            UserPosition(distance=1.0, bearing=-math.pi)
        with pytest.raises(DomainError):
            UserPosition(distance=1.0, bearing=3.5)

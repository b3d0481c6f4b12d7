"""Pixel-space eye measurements <-> metric viewer geometry.

The model is angular: a face's pixel extent is taken to be proportional to
the angle it subtends in the camera's horizontal field of view.  With
horizontal field of view ``fov_h`` (radians) and frame width ``frame_width``
(pixels), an eye pair of true span ``ipd`` (cm) seen at distance ``d`` (cm)
subtends ``2*atan(ipd / (2*d))`` radians and therefore

    eye_distance_px = frame_width * 2*atan(ipd / (2*d)) / fov_h

pixels.  Inverting gives the ranging formula

    d = ipd / (2 * tan(fov_h * eye_distance_px / (2 * frame_width)))

Both directions are exposed so that a simulator can project ground truth and
an estimator can recover it; composing them is the identity up to floating
point.  All lengths are centimeters, all angles radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Mean adult interpupillary distance, cm.  A config knob, not ground truth.
DEFAULT_IPD_CM = 6.3


@dataclass(frozen=True)
class CameraIntrinsics:
    """Horizontal field of view (radians) and frame width (pixels)."""

    fov_h: float
    frame_width: float

    def __post_init__(self):
        if not 0.0 < self.fov_h < math.pi:
            raise DomainError(f"fov_h must be in (0, pi), got {self.fov_h}")
        if not self.frame_width > 0:
            raise DomainError(f"frame_width must be positive, got {self.frame_width}")


@dataclass(frozen=True)
class EyeObservation:
    """One detected face: inter-eye pixel span and signed midpoint offset.

    ``midpoint_offset_px`` measures the eye-pair midpoint from the frame's
    vertical midline, positive to the right.  Its bound (half the frame
    width) depends on the intrinsics it is read against, so it is checked at
    the use site rather than here.
    """

    eye_distance_px: float
    midpoint_offset_px: float = 0.0

    def __post_init__(self):
        if not self.eye_distance_px > 0:
            raise DomainError(
                f"eye_distance_px must be positive, got {self.eye_distance_px}"
            )


@dataclass(frozen=True)
class InterpupillaryDistance:
    """Distance between a person's pupils, cm."""

    value: float = DEFAULT_IPD_CM

    def __post_init__(self):
        if not self.value > 0:
            raise DomainError(f"ipd must be positive, got {self.value}")


@dataclass(frozen=True)
class UserPosition:
    """Polar position of one viewer: distance (cm) and signed bearing (rad).

    Bearing 0 is the direction perpendicular to the screen; the camera is
    the origin.  Positions recovered from in-frame observations always have
    |bearing| < fov_h / 2, but directly constructed positions may carry any
    bearing in (-pi, pi].
    """

    distance: float
    bearing: float = 0.0

    def __post_init__(self):
        if not self.distance > 0:
            raise DomainError(f"distance must be positive, got {self.distance}")
        if not -math.pi < self.bearing <= math.pi:
            raise DomainError(f"bearing must be in (-pi, pi], got {self.bearing}")

    def to_cartesian(self) -> tuple[float, float]:
        """(p, q) with p along the reference direction, q to the right."""
        return (
            self.distance * math.cos(self.bearing),
            self.distance * math.sin(self.bearing),
        )


def angular_fraction(obs: EyeObservation, cam: CameraIntrinsics) -> float:
    """Fraction of the field of view subtended by the eye pair: E / W.

    Requires 0 < E <= W; the result lies in (0, 1].
    """
    if not 0 < obs.eye_distance_px <= cam.frame_width:
        raise DomainError(
            f"eye_distance_px {obs.eye_distance_px} outside (0, {cam.frame_width}]"
        )
    return obs.eye_distance_px / cam.frame_width


def estimate_distance(
    obs: EyeObservation,
    cam: CameraIntrinsics,
    ipd: InterpupillaryDistance = InterpupillaryDistance(),
) -> float:
    """Metric face-screen distance (cm) from an inter-eye pixel span.

    Evaluates ``ipd / (2 * tan(fov_h * E / (2 * W)))``.  Strictly decreasing
    in E and strictly increasing in ipd.  Raises DomainError when E <= 0 or
    the half-angle reaches pi/2 (a face wider than the model admits); both
    signal an invalid detection rather than a recoverable state.
    """
    if obs.eye_distance_px <= 0:
        raise DomainError(f"eye_distance_px must be positive, got {obs.eye_distance_px}")
    half_angle = cam.fov_h * obs.eye_distance_px / (2.0 * cam.frame_width)
    if half_angle >= math.pi / 2.0:
        raise DomainError(
            f"subtended half-angle {half_angle:.6f} rad >= pi/2; "
            "observation is wider than the angular model admits"
        )
    return ipd.value / (2.0 * math.tan(half_angle))


def project_eye_distance(
    pos_distance: float,
    cam: CameraIntrinsics,
    ipd: InterpupillaryDistance = InterpupillaryDistance(),
) -> float:
    """Inter-eye pixel span a viewer at ``pos_distance`` cm would produce.

    Evaluates ``(2 * W / fov_h) * atan(ipd / (2 * d))``.  This is the
    simulator direction; composing with :func:`estimate_distance` recovers
    the distance up to floating point.  Raises DomainError when the
    projected span exceeds the frame width (viewer too close): clamping
    instead would silently corrupt the round trip.
    """
    if not pos_distance > 0:
        raise DomainError(f"distance must be positive, got {pos_distance}")
    span = (2.0 * cam.frame_width / cam.fov_h) * math.atan(
        ipd.value / (2.0 * pos_distance)
    )
    if span > cam.frame_width:
        raise DomainError(
            f"projected eye span {span:.2f} px exceeds frame width "
            f"{cam.frame_width} px; viewer is too close to fit the frame"
        )
    return span

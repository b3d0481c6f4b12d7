"""Per-viewer polar positioning and the multi-viewer center.

A viewer's bearing comes from the same angular model as ranging: pixel
offset from the frame midline maps linearly to angle, ``bearing = fov_h *
offset / frame_width``.  Combining bearing with the ranged distance gives a
full polar position per face.

The "center" of a viewer set is the point minimizing the sum of squared
distances to all viewers.  In Cartesian coordinates that is the arithmetic
centroid, so the closed form is: embed each viewer as
``(d*cos(b), d*sin(b))``, average componentwise, and convert back to polar
with full-quadrant angle recovery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, EmptySetError
from .geometry import (
    CameraIntrinsics,
    EyeObservation,
    InterpupillaryDistance,
    UserPosition,
    estimate_distance,
)


@dataclass(frozen=True)
class ViewerSet:
    """Ordered, non-empty collection of viewer positions."""

    positions: tuple[UserPosition, ...]

    def __init__(self, positions: Sequence[UserPosition]):
        if len(positions) == 0:
            raise EmptySetError("a viewer set needs at least one viewer")
        object.__setattr__(self, "positions", tuple(positions))

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)


@dataclass(frozen=True)
class CenterPosition:
    """Polar position of the experience-balancing center.

    Unlike :class:`UserPosition`, distance 0 is legal (viewers balanced
    around the camera); the bearing is then canonically 0 because it is
    otherwise indeterminate.
    """

    distance: float
    bearing: float

    def __post_init__(self):
        if self.distance < 0:
            raise DomainError(f"distance must be >= 0, got {self.distance}")
        if self.distance == 0 and self.bearing != 0.0:
            raise DomainError("bearing must be 0 when distance is 0")

    def to_cartesian(self) -> tuple[float, float]:
        return (
            self.distance * math.cos(self.bearing),
            self.distance * math.sin(self.bearing),
        )


def estimate_bearing(obs: EyeObservation, cam: CameraIntrinsics) -> float:
    """Signed bearing (radians) from the eye-midpoint pixel offset.

    ``bearing = fov_h * offset / frame_width``; the result satisfies
    |bearing| <= fov_h / 2 whenever the midpoint is inside the frame.
    """
    if abs(obs.midpoint_offset_px) > cam.frame_width / 2.0:
        raise DomainError(
            f"midpoint offset {obs.midpoint_offset_px} px is outside the frame "
            f"(half-width {cam.frame_width / 2.0} px)"
        )
    return cam.fov_h * obs.midpoint_offset_px / cam.frame_width


def locate_viewer(
    obs: EyeObservation,
    cam: CameraIntrinsics,
    ipd: InterpupillaryDistance = InterpupillaryDistance(),
) -> UserPosition:
    """Full polar position of one detected face: range plus bearing."""
    return UserPosition(
        distance=estimate_distance(obs, cam, ipd),
        bearing=estimate_bearing(obs, cam),
    )


def pairwise_distance(a: UserPosition | CenterPosition, b: UserPosition | CenterPosition) -> float:
    """Euclidean distance (cm) between two polar positions.

    Law of cosines ``sqrt(da^2 + db^2 - 2*da*db*cos(ba - bb))`` evaluated in
    the half-angle form ``hypot(da - db, 2*sqrt(da*db)*sin((ba - bb)/2))``,
    which avoids the cancellation the expanded form suffers for nearby
    points.  Symmetric, non-negative, zero exactly for identical positions.
    """
    cross = 2.0 * math.sqrt(a.distance * b.distance) * math.sin((a.bearing - b.bearing) / 2.0)
    return math.hypot(a.distance - b.distance, cross)


def compute_center(viewers: ViewerSet) -> CenterPosition:
    """Closed-form minimizer of the summed squared distance to all viewers.

    Averages the Cartesian embeddings in input order (fixed left fold, so
    results are reproducible bit for bit) and converts back to polar via
    ``hypot`` / ``atan2``.  A single viewer is its own center.
    """
    if len(viewers) == 0:
        raise EmptySetError("cannot center an empty viewer set")
    n = len(viewers)
    p_sum = 0.0
    q_sum = 0.0
    for pos in viewers:
        p, q = pos.to_cartesian()
        p_sum += p
        q_sum += q
    p_c = p_sum / n
    q_c = q_sum / n
    distance = math.hypot(p_c, q_c)
    if distance == 0.0:
        return CenterPosition(distance=0.0, bearing=0.0)
    return CenterPosition(distance=distance, bearing=math.atan2(q_c, p_c))


def objective_value(viewers: ViewerSet, candidate: CenterPosition) -> float:
    """Sum of squared viewer-to-candidate distances (cm^2)."""
    return sum(pairwise_distance(pos, candidate) ** 2 for pos in viewers)

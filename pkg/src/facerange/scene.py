"""Synthetic scenes: the ground-truth oracle behind every estimator test.

A scene places virtual viewers at known polar positions in front of a known
camera.  Rendering a frame produces exactly what a face detector would
report under the angular model (inter-eye pixel span and midpoint offset),
optionally perturbed by lighting-dependent Gaussian pixel noise.  Because
the noise-free projection is the exact inverse of the estimators, the whole
pipeline can be checked against known truth end to end.

The same module synthesizes accelerometer traces (gravity plus sinusoidal
shake segments plus bounded noise) to drive the motion gate, and calibrates
the pixel-noise level that reproduces a target distance mean squared error.

All pseudo-randomness uses NumPy's seeded PCG64 generator; every stream is
keyed by explicit integers so identical inputs give identical output on any
platform.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np
import yaml

from .errors import (
    ConfigError,
    ConvergenceError,
    DomainError,
    MalformedLogError,
    OutOfFrameError,
    TraceSpecError,
)
from .gate import STANDARD_GRAVITY, MotionSample
from .geometry import (
    CameraIntrinsics,
    EyeObservation,
    InterpupillaryDistance,
    UserPosition,
    project_eye_distance,
)

# Noisy eye spans are clamped to this floor (px) instead of going nonpositive.
EYE_SPAN_FLOOR_PX = 0.1

# Bounded sensor noise for synthetic accelerometer traces: per-axis Gaussian
# sigma and hard clip, chosen so a resting trace never deviates from gravity
# by more than 0.05 m/s^2.
ACCEL_NOISE_SIGMA = 0.008
ACCEL_NOISE_CLIP = 0.03


class Lighting(enum.Enum):
    DARK = "dark"
    MODEST = "modest"
    BRIGHT = "bright"


@dataclass(frozen=True)
class SceneViewer:
    """One virtual viewer: true position plus personal eye span."""

    position: UserPosition
    ipd: InterpupillaryDistance = InterpupillaryDistance()


@dataclass(frozen=True)
class Scene:
    """Ground-truth viewer layout in front of one camera.

    Construction fails with OutOfFrameError unless every viewer projects
    inside the frame (eye span within the frame width, bearing within the
    field of view).  Eye boxes of different viewers may overlap; see
    :meth:`overlapping_eye_boxes`.
    """

    viewers: tuple[SceneViewer, ...]
    cam: CameraIntrinsics
    lighting: Lighting = Lighting.MODEST

    def __init__(
        self,
        viewers: Sequence[SceneViewer],
        cam: CameraIntrinsics,
        lighting: Lighting = Lighting.MODEST,
    ):
        object.__setattr__(self, "viewers", tuple(viewers))
        object.__setattr__(self, "cam", cam)
        object.__setattr__(self, "lighting", lighting)
        for i, v in enumerate(self.viewers):
            if abs(v.position.bearing) >= cam.fov_h / 2.0:
                raise OutOfFrameError(
                    f"viewer {i} bearing {v.position.bearing:.4f} rad is outside "
                    f"the half field of view {cam.fov_h / 2.0:.4f} rad"
                )
            try:
                project_eye_distance(v.position.distance, cam, v.ipd)
            except DomainError as exc:
                raise OutOfFrameError(f"viewer {i}: {exc}") from exc

    def true_projection(self, index: int) -> tuple[float, float]:
        """Noise-free (eye span px, midpoint offset px) for one viewer."""
        v = self.viewers[index]
        span = project_eye_distance(v.position.distance, self.cam, v.ipd)
        offset = self.cam.frame_width * v.position.bearing / self.cam.fov_h
        return span, offset

    def overlapping_eye_boxes(self) -> list[tuple[int, int]]:
        """Pairs of viewer indices whose projected eye intervals overlap."""
        intervals = []
        for i in range(len(self.viewers)):
            span, offset = self.true_projection(i)
            intervals.append((offset - span / 2.0, offset + span / 2.0))
        pairs = []
        for i in range(len(intervals)):
            for j in range(i + 1, len(intervals)):
                lo = max(intervals[i][0], intervals[j][0])
                hi = min(intervals[i][1], intervals[j][1])
                if lo < hi:
                    pairs.append((i, j))
        return pairs


@dataclass(frozen=True)
class NoiseModel:
    """Additive pixel noise on eye span and midpoint offset, per lighting.

    sigma_px maps each lighting level to the standard deviation of the
    Gaussian perturbation; seed keys the deterministic random stream.
    """

    sigma_px: Mapping[Lighting, float]
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "sigma_px", dict(self.sigma_px))
        for lighting, sigma in self.sigma_px.items():
            if sigma < 0:
                raise DomainError(f"sigma_px[{lighting}] must be >= 0, got {sigma}")
        if self.seed < 0:
            raise DomainError("seed must be a nonnegative integer")

    @classmethod
    def uniform(cls, sigma: float, seed: int = 0) -> "NoiseModel":
        return cls(sigma_px={level: sigma for level in Lighting}, seed=seed)

    def sigma_for(self, lighting: Lighting) -> float:
        try:
            return self.sigma_px[lighting]
        except KeyError:
            raise DomainError(f"noise model has no sigma for {lighting}") from None


@dataclass(frozen=True)
class DetectionFrame:
    """Emulated face-detector output for one frame.

    Observations follow scene order.  ``clamped[i]`` is True when viewer
    i's noisy measurement had to be pulled back into validity; clamped
    observations must be excluded from accuracy statistics.
    """

    timestamp: float
    observations: tuple[EyeObservation, ...]
    clamped: tuple[bool, ...]

    def __post_init__(self):
        if len(self.observations) != len(self.clamped):
            raise DomainError("observations and clamped flags must align")


def render_frame(
    scene: Scene,
    noise: NoiseModel,
    frame_index: int,
    timestamp: float | None = None,
) -> DetectionFrame:
    """Render what the face detector would report for one frame.

    The noise-free part is the exact forward projection of each viewer;
    noise adds independent zero-mean Gaussian perturbations (sigma chosen
    by the scene's lighting) to each eye span and midpoint offset.  Spans
    are clamped to a small positive floor and offsets to the frame, with
    the clamp flagged per viewer.  Output is a pure function of
    (scene, noise.seed, frame_index).
    """
    if frame_index < 0:
        raise DomainError("frame_index must be >= 0")
    sigma = noise.sigma_for(scene.lighting)
    rng = np.random.default_rng((noise.seed, frame_index))
    half_frame = scene.cam.frame_width / 2.0
    observations = []
    clamped_flags = []
    for i in range(len(scene.viewers)):
        try:
            span, offset = scene.true_projection(i)
        except DomainError as exc:
            raise OutOfFrameError(f"viewer {i}: {exc}") from exc
        if sigma > 0:
            span += rng.normal(0.0, sigma)
            offset += rng.normal(0.0, sigma)
        clamped = False
        if span < EYE_SPAN_FLOOR_PX:
            span = EYE_SPAN_FLOOR_PX
            clamped = True
        if offset > half_frame:
            offset = half_frame
            clamped = True
        elif offset < -half_frame:
            offset = -half_frame
            clamped = True
        observations.append(EyeObservation(eye_distance_px=span, midpoint_offset_px=offset))
        clamped_flags.append(clamped)
    return DetectionFrame(
        timestamp=float(frame_index) if timestamp is None else timestamp,
        observations=tuple(observations),
        clamped=tuple(clamped_flags),
    )


@dataclass(frozen=True)
class MotionSegment:
    """One shake burst: [start, end) seconds, sinusoid amplitude and frequency."""

    start: float
    end: float
    amplitude: float
    frequency: float

    def __post_init__(self):
        if self.end <= self.start:
            raise TraceSpecError(f"segment end {self.end} must exceed start {self.start}")
        if self.amplitude <= 0 or self.frequency <= 0:
            raise TraceSpecError("segment amplitude and frequency must be positive")


def synthesize_accel_trace(
    segments: Sequence[MotionSegment],
    duration: float,
    sample_rate: float,
    seed: int,
) -> list[MotionSample]:
    """Gravity-plus-shake accelerometer trace at a fixed sample rate.

    Outside the segments the magnitude stays within 0.05 m/s^2 of gravity
    (noise is clipped, not just unlikely).  Inside a segment a sinusoid of
    the given amplitude rides on the gravity axis, starting at its crest so
    the first in-segment sample already carries the full deviation.
    """
    if sample_rate <= 0 or duration <= 0:
        raise TraceSpecError("duration and sample_rate must be positive")
    ordered = sorted(segments, key=lambda s: s.start)
    for seg in ordered:
        if seg.start < 0 or seg.end > duration:
            raise TraceSpecError(f"segment [{seg.start}, {seg.end}) outside [0, {duration}]")
    for prev, cur in zip(ordered, ordered[1:]):
        if cur.start < prev.end:
            raise TraceSpecError(
                f"segments [{prev.start}, {prev.end}) and [{cur.start}, {cur.end}) overlap"
            )

    n = int(round(duration * sample_rate))
    rng = np.random.default_rng(seed)
    noise = np.clip(
        rng.normal(0.0, ACCEL_NOISE_SIGMA, size=(n, 3)),
        -ACCEL_NOISE_CLIP,
        ACCEL_NOISE_CLIP,
    )
    samples = []
    for k in range(n):
        t = k / sample_rate
        shake = 0.0
        for seg in ordered:
            if seg.start <= t < seg.end:
                # cosine phase: crest at segment start
                shake = seg.amplitude * math.cos(2.0 * math.pi * seg.frequency * (t - seg.start))
                break
        samples.append(
            MotionSample(
                timestamp=t,
                accel=(
                    float(noise[k, 0]),
                    float(noise[k, 1]),
                    STANDARD_GRAVITY + shake + float(noise[k, 2]),
                ),
            )
        )
    return samples


def simulate_distance_estimates(
    distances_cm: Sequence[float],
    cam: CameraIntrinsics,
    ipd: InterpupillaryDistance,
    sigma_px: float,
    noise_std_normal: np.ndarray,
) -> np.ndarray:
    """Vectorized ranging under pixel noise ``sigma_px * noise_std_normal``.

    ``noise_std_normal`` has shape (len(distances), trials); the result has
    the same shape, one estimated distance per trial.  Perturbed spans that
    would hit the clamp floor come back as NaN so clamped observations
    never enter an accuracy statistic.
    """
    d_true = np.asarray(distances_cm, dtype=float)[:, None]
    span_true = (2.0 * cam.frame_width / cam.fov_h) * np.arctan(ipd.value / (2.0 * d_true))
    span = span_true + sigma_px * noise_std_normal
    valid = span >= EYE_SPAN_FLOOR_PX
    half_angle = cam.fov_h * span / (2.0 * cam.frame_width)
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(valid, ipd.value / (2.0 * np.tan(half_angle)), np.nan)


def calibrate_noise(
    target_mse: float,
    distances_cm: Sequence[float],
    cam: CameraIntrinsics,
    ipd: InterpupillaryDistance = InterpupillaryDistance(),
    trials: int = 20_000,
    seed: int | Sequence[int] = 0,
    sigma_max: float = 50.0,
) -> float:
    """Pixel-noise sigma whose Monte-Carlo ranging MSE matches ``target_mse``.

    The MSE over the distance family is monotone increasing in sigma, so a
    bisection on [0, sigma_max] with common random numbers converges to the
    unique root.  Raises ConvergenceError when the target is not bracketed
    (i.e. even sigma_max cannot produce that much error).
    """
    if target_mse <= 0:
        raise DomainError("target_mse must be positive")
    if not distances_cm:
        raise DomainError("need at least one true distance to calibrate against")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(size=(len(distances_cm), trials))

    d_true = np.asarray(distances_cm, dtype=float)[:, None]

    def mse(sigma: float) -> float:
        est = simulate_distance_estimates(distances_cm, cam, ipd, sigma, z)
        return float(np.nanmean((est - d_true) ** 2))

    if mse(sigma_max) < target_mse:
        raise ConvergenceError(
            f"target MSE {target_mse} not reachable with sigma <= {sigma_max} px"
        )
    lo, hi = 0.0, sigma_max
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if mse(mid) < target_mse:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# --- frame log format: frame,timestamp_s,viewer_index,E_px,O_px,clamped ---

def format_frame_log(frames: Iterable[DetectionFrame]) -> str:
    lines = []
    for frame_index, frame in enumerate(frames):
        for viewer_index, (obs, clamped) in enumerate(
            zip(frame.observations, frame.clamped)
        ):
            lines.append(
                f"{frame_index},{frame.timestamp!r},{viewer_index},"
                f"{obs.eye_distance_px!r},{obs.midpoint_offset_px!r},{int(clamped)}\n"
            )
    return "".join(lines)


def parse_frame_log(text: str) -> list[DetectionFrame]:
    rows: dict[int, list[tuple[int, float, float, float, bool]]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 6:
            raise MalformedLogError(f"frame log line {lineno}: expected 6 fields")
        frame_i = int(parts[0])
        rows.setdefault(frame_i, []).append(
            (int(parts[2]), float(parts[1]), float(parts[3]), float(parts[4]), parts[5] == "1")
        )
    frames = []
    for frame_i in sorted(rows):
        entries = sorted(rows[frame_i])
        frames.append(
            DetectionFrame(
                timestamp=entries[0][1],
                observations=tuple(
                    EyeObservation(eye_distance_px=e[2], midpoint_offset_px=e[3])
                    for e in entries
                ),
                clamped=tuple(e[4] for e in entries),
            )
        )
    return frames


def write_frame_log(path: str | Path, frames: Iterable[DetectionFrame]) -> None:
    Path(path).write_text(format_frame_log(frames))


def read_frame_log(path: str | Path) -> list[DetectionFrame]:
    return parse_frame_log(Path(path).read_text())


# --- scene files: YAML with camera, viewers, lighting, noise, motion segments ---

@dataclass(frozen=True)
class TraceSettings:
    """How to synthesize the scene's accelerometer trace."""

    duration_s: float = 60.0
    sample_rate_hz: float = 50.0
    seed: int = 0

    def __post_init__(self):
        if self.duration_s <= 0 or self.sample_rate_hz <= 0:
            raise TraceSpecError("trace duration and sample rate must be positive")


@dataclass(frozen=True)
class SceneBundle:
    """Everything a scene file describes."""

    scene: Scene
    noise: NoiseModel
    segments: tuple[MotionSegment, ...]
    trace: TraceSettings

    def synthesize_trace(self) -> list[MotionSample]:
        return synthesize_accel_trace(
            self.segments,
            duration=self.trace.duration_s,
            sample_rate=self.trace.sample_rate_hz,
            seed=self.trace.seed,
        )


def _angle_from(mapping: Mapping, deg_key: str, rad_key: str, what: str) -> float:
    if deg_key in mapping and rad_key in mapping:
        raise ConfigError(f"{what}: give {deg_key} or {rad_key}, not both")
    if deg_key in mapping:
        return math.radians(float(mapping[deg_key]))
    if rad_key in mapping:
        return float(mapping[rad_key])
    raise ConfigError(f"{what}: missing {deg_key} or {rad_key}")


def parse_scene_mapping(data: Mapping) -> SceneBundle:
    """Build a scene bundle from a parsed scene file mapping."""
    try:
        cam_data = data["camera"]
        cam = CameraIntrinsics(
            fov_h=_angle_from(cam_data, "fov_h_deg", "fov_h_rad", "camera"),
            frame_width=float(cam_data["frame_width_px"]),
        )
        lighting = Lighting(str(data.get("lighting", "modest")).lower())
        viewers = []
        for i, v in enumerate(data.get("viewers", [])):
            viewers.append(
                SceneViewer(
                    position=UserPosition(
                        distance=float(v["distance_cm"]),
                        bearing=_angle_from(v, "bearing_deg", "bearing_rad", f"viewer {i}"),
                    ),
                    ipd=InterpupillaryDistance(float(v.get("ipd_cm", 6.3))),
                )
            )
        noise_data = data.get("noise", {})
        sigma_data = noise_data.get("sigma_px", {})
        sigma_px = {level: float(sigma_data.get(level.value, 0.0)) for level in Lighting}
        noise = NoiseModel(sigma_px=sigma_px, seed=int(noise_data.get("seed", 0)))
        segments = tuple(
            MotionSegment(
                start=float(s["start_s"]),
                end=float(s["end_s"]),
                amplitude=float(s["amplitude_ms2"]),
                frequency=float(s["frequency_hz"]),
            )
            for s in data.get("motion_segments", [])
        )
        trace_data = data.get("trace", {})
        trace = TraceSettings(
            duration_s=float(trace_data.get("duration_s", 60.0)),
            sample_rate_hz=float(trace_data.get("sample_rate_hz", 50.0)),
            seed=int(trace_data.get("seed", 0)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad scene file: {exc}") from exc
    return SceneBundle(
        scene=Scene(viewers=viewers, cam=cam, lighting=lighting),
        noise=noise,
        segments=segments,
        trace=trace,
    )


def load_scene(path: str | Path) -> SceneBundle:
    data = yaml.safe_load(Path(path).read_text())
    if not isinstance(data, Mapping):
        raise ConfigError(f"scene file {path} is not a mapping")
    return parse_scene_mapping(data)

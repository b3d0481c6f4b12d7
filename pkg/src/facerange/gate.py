"""Motion-gated camera duty cycling.

The camera stays closed while the phone is still.  A stream of timestamped
accelerometer samples drives a pure state machine: when the acceleration
magnitude deviates from standard gravity by more than a threshold the
camera opens and a capture fires; captures repeat at a bounded rate while
motion persists; after a stationary timeout the camera closes again.

The machine never reads wall-clock time.  All timing comes from the sample
timestamps, which makes trace replay exactly reproducible.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ClockError, DomainError, MalformedLogError

STANDARD_GRAVITY = 9.80665  # m/s^2


@dataclass(frozen=True)
class MotionSample:
    """One accelerometer reading: time (s) and acceleration 3-vector (m/s^2)."""

    timestamp: float
    accel: tuple[float, float, float]

    def deviation(self) -> float:
        """Absolute deviation of the acceleration magnitude from gravity."""
        ax, ay, az = self.accel
        return abs(math.sqrt(ax * ax + ay * ay + az * az) - STANDARD_GRAVITY)


@dataclass(frozen=True)
class GateConfig:
    """Tuning knobs of the gate.

    motion_threshold: deviation from gravity (m/s^2) that counts as motion;
        0 is allowed as the degenerate always-open configuration.
    window: sliding window (s) over which motion is considered present.
    stationary_timeout: close the camera after this long without motion (s).
    min_capture_interval: minimum spacing between captures (s).
    """

    motion_threshold: float = 0.8
    window: float = 0.25
    stationary_timeout: float = 2.0
    min_capture_interval: float = 0.5

    def __post_init__(self):
        if self.motion_threshold < 0:
            raise DomainError("motion_threshold must be >= 0")
        for name in ("window", "stationary_timeout", "min_capture_interval"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")
        if self.stationary_timeout < self.window:
            raise DomainError("stationary_timeout must be >= window")


class Mode(enum.Enum):
    CAMERA_CLOSED = "closed"
    CAMERA_OPEN = "open"


class EventKind(enum.Enum):
    OPEN = "open"
    CAPTURE = "capture"
    CLOSE = "close"


@dataclass(frozen=True)
class GateState:
    """Immutable gate state between samples.

    last_motion_at is the timestamp of the most recent above-threshold
    sample (-inf before any), last_capture_at of the most recent capture,
    and last_sample_at of the most recent sample fed in (used to reject
    non-increasing clocks).
    """

    mode: Mode = Mode.CAMERA_CLOSED
    last_motion_at: float = -math.inf
    last_capture_at: float | None = None
    last_sample_at: float = -math.inf


@dataclass(frozen=True)
class GateEvent:
    timestamp: float
    kind: EventKind


def detect_motion(samples: Sequence[MotionSample], cfg: GateConfig) -> bool:
    """True iff any sample in the window deviates from gravity beyond threshold."""
    if not samples:
        raise DomainError("detect_motion needs a non-empty window")
    return max(s.deviation() for s in samples) > cfg.motion_threshold


def step(
    state: GateState, sample: MotionSample, cfg: GateConfig
) -> tuple[GateState, list[GateEvent]]:
    """Feed one sample; return the successor state and emitted events.

    Transitions:
      closed -> open  on motion; emits Open then an immediate Capture
                      (subject to min_capture_interval across cycles).
      open   -> open  with a Capture while motion persists, at most one
                      per min_capture_interval.
      open   -> closed once stationary_timeout elapses without motion.

    Motion "persists" for ``cfg.window`` seconds after the last
    above-threshold sample, so brief zero crossings inside a shake do not
    end it.  Timestamps must be strictly increasing.
    """
    t = sample.timestamp
    if t <= state.last_sample_at:
        raise ClockError(
            f"sample at {t} s does not advance the clock (last {state.last_sample_at} s)"
        )

    last_motion = t if sample.deviation() > cfg.motion_threshold else state.last_motion_at
    in_motion = (t - last_motion) <= cfg.window

    def capture_allowed(last_capture: float | None) -> bool:
        return last_capture is None or t - last_capture >= cfg.min_capture_interval

    events: list[GateEvent] = []
    mode = state.mode
    last_capture = state.last_capture_at

    if mode is Mode.CAMERA_CLOSED:
        if in_motion:
            mode = Mode.CAMERA_OPEN
            events.append(GateEvent(t, EventKind.OPEN))
            if capture_allowed(last_capture):
                events.append(GateEvent(t, EventKind.CAPTURE))
                last_capture = t
    else:
        if t - last_motion >= cfg.stationary_timeout:
            mode = Mode.CAMERA_CLOSED
            events.append(GateEvent(t, EventKind.CLOSE))
        elif in_motion and capture_allowed(last_capture):
            events.append(GateEvent(t, EventKind.CAPTURE))
            last_capture = t

    return (
        GateState(
            mode=mode,
            last_motion_at=last_motion,
            last_capture_at=last_capture,
            last_sample_at=t,
        ),
        events,
    )


def run_trace(
    samples: Iterable[MotionSample],
    cfg: GateConfig,
    state: GateState = GateState(),
) -> list[GateEvent]:
    """Feed a whole trace through the gate and collect the event log."""
    events: list[GateEvent] = []
    for sample in samples:
        state, emitted = step(state, sample, cfg)
        events.extend(emitted)
    return events


def validate_event_log(events: Sequence[GateEvent]) -> None:
    """Raise MalformedLogError unless the log is a legal gate output.

    Legal means: timestamps nondecreasing, the open/close projection is a
    prefix of (open close)*, and captures occur only while open.
    """
    open_now = False
    last_t = -math.inf
    for i, ev in enumerate(events):
        if ev.timestamp < last_t:
            raise MalformedLogError(f"event {i} at {ev.timestamp} s goes back in time")
        last_t = ev.timestamp
        if ev.kind is EventKind.OPEN:
            if open_now:
                raise MalformedLogError(f"event {i}: open while already open")
            open_now = True
        elif ev.kind is EventKind.CLOSE:
            if not open_now:
                raise MalformedLogError(f"event {i}: close while not open")
            open_now = False
        else:
            if not open_now:
                raise MalformedLogError(f"event {i}: capture while closed")


def duty_cycle(events: Sequence[GateEvent], horizon: float) -> float:
    """Fraction of the horizon the camera spends open, in [0, 1].

    An unterminated trailing open interval counts until the horizon.
    Intervals are clipped to [0, horizon].
    """
    if horizon <= 0:
        raise DomainError("horizon must be positive")
    validate_event_log(events)
    total = 0.0
    opened_at: float | None = None
    for ev in events:
        if ev.kind is EventKind.OPEN:
            opened_at = ev.timestamp
        elif ev.kind is EventKind.CLOSE:
            total += max(0.0, min(ev.timestamp, horizon) - max(opened_at, 0.0))
            opened_at = None
    if opened_at is not None:
        total += max(0.0, horizon - max(opened_at, 0.0))
    return min(1.0, total / horizon)


# --- line-delimited trace and event-log formats ---

def format_trace(samples: Iterable[MotionSample]) -> str:
    """Serialize samples as ``timestamp_s,ax,ay,az`` lines."""
    return "".join(
        f"{s.timestamp!r},{s.accel[0]!r},{s.accel[1]!r},{s.accel[2]!r}\n" for s in samples
    )


def parse_trace(text: str) -> list[MotionSample]:
    samples = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 4:
            raise MalformedLogError(f"trace line {lineno}: expected 4 fields, got {len(parts)}")
        t, ax, ay, az = (float(p) for p in parts)
        samples.append(MotionSample(timestamp=t, accel=(ax, ay, az)))
    return samples


def write_trace(path: str | Path, samples: Iterable[MotionSample]) -> None:
    Path(path).write_text(format_trace(samples))


def read_trace(path: str | Path) -> list[MotionSample]:
    return parse_trace(Path(path).read_text())


def format_event_log(events: Iterable[GateEvent]) -> str:
    """Serialize events as ``timestamp_s,kind`` lines."""
    return "".join(f"{ev.timestamp!r},{ev.kind.value}\n" for ev in events)


def parse_event_log(text: str) -> list[GateEvent]:
    kinds = {k.value: k for k in EventKind}
    events = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        t_str, _, kind_str = line.partition(",")
        if kind_str not in kinds:
            raise MalformedLogError(f"event line {lineno}: unknown kind {kind_str!r}")
        events.append(GateEvent(timestamp=float(t_str), kind=kinds[kind_str]))
    return events


def write_event_log(path: str | Path, events: Iterable[GateEvent]) -> None:
    Path(path).write_text(format_event_log(events))


def read_event_log(path: str | Path) -> list[GateEvent]:
    return parse_event_log(Path(path).read_text())

"""Mapping the viewing center to a display parameter (font size).

Farther viewers get larger text.  The curve is piecewise linear over
configurable (distance, size) breakpoints, clamped at both ends, which
keeps the on-screen angular text size roughly constant to first order.
A small hysteresis band suppresses frame-to-frame flicker when the
estimated distance jitters around a size boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .viewers import CenterPosition

DEFAULT_BREAKPOINTS = ((20.0, 12.0), (40.0, 18.0), (60.0, 26.0), (80.0, 36.0))
DEFAULT_HYSTERESIS_BAND_PT = 1.5


@dataclass(frozen=True)
class FontPolicy:
    """Distance (cm) -> font size (pt) curve.

    Breakpoints must be strictly increasing in both coordinates and there
    must be at least two; sizes stay within [min_size, max_size], which
    default to the first and last breakpoint sizes.
    """

    breakpoints: tuple[tuple[float, float], ...] = DEFAULT_BREAKPOINTS
    min_size: float | None = None
    max_size: float | None = None

    def __post_init__(self):
        bps = tuple((float(d), float(s)) for d, s in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if len(bps) < 2:
            raise DomainError("a font policy needs at least two breakpoints")
        for (d0, s0), (d1, s1) in zip(bps, bps[1:]):
            if not (d1 > d0 and s1 > s0):
                raise DomainError(
                    "breakpoints must be strictly increasing in distance and size"
                )
        min_size = bps[0][1] if self.min_size is None else float(self.min_size)
        max_size = bps[-1][1] if self.max_size is None else float(self.max_size)
        object.__setattr__(self, "min_size", min_size)
        object.__setattr__(self, "max_size", max_size)
        if min_size > max_size:
            raise DomainError("min_size must not exceed max_size")
        for _, s in bps:
            if not min_size <= s <= max_size:
                raise DomainError(f"breakpoint size {s} outside [{min_size}, {max_size}]")


@dataclass(frozen=True)
class DisplayDecision:
    """One emitted font size, with the center that produced it.

    hysteresis_applied is True when the band suppressed a would-be change.
    """

    font_size: float
    source_center: CenterPosition | None = None
    hysteresis_applied: bool = False


def font_size_for(center: CenterPosition, policy: FontPolicy) -> float:
    """Piecewise-linear interpolation of the policy curve at the center distance.

    Distances below the first breakpoint clamp to its size, above the last
    to its size; the result is additionally clamped to [min_size, max_size].
    Monotone nondecreasing in distance.
    """
    d = center.distance
    bps = policy.breakpoints
    if d <= bps[0][0]:
        size = bps[0][1]
    elif d >= bps[-1][0]:
        size = bps[-1][1]
    else:
        size = bps[-1][1]
        for (d0, s0), (d1, s1) in zip(bps, bps[1:]):
            if d <= d1:
                size = s0 + (s1 - s0) * (d - d0) / (d1 - d0)
                break
    return min(max(size, policy.min_size), policy.max_size)


def apply_hysteresis(
    previous: DisplayDecision | None,
    candidate: float,
    band: float,
    source_center: CenterPosition | None = None,
) -> DisplayDecision:
    """Adopt ``candidate`` unless it is within ``band`` of the previous size.

    With no previous decision the candidate is adopted outright.  Applying
    the same candidate twice yields the same decision, so chained frames
    cannot oscillate inside the band.
    """
    if band < 0:
        raise DomainError("hysteresis band must be >= 0")
    if previous is not None and abs(candidate - previous.font_size) <= band:
        return DisplayDecision(
            font_size=previous.font_size,
            source_center=source_center,
            hysteresis_applied=candidate != previous.font_size,
        )
    return DisplayDecision(
        font_size=candidate, source_center=source_center, hysteresis_applied=False
    )

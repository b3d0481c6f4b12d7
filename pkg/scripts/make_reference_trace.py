#!/usr/bin/env python3
"""Regenerate the shipped reference accelerometer trace.

The trace matches the default scene file: 60 s at 50 Hz with shake bursts
on [10, 18) and [40, 44) seconds, i.e. motion on 20% of the horizon.
Synthesis is deterministic, so rerunning this script reproduces the
committed file byte for byte.
"""

from pathlib import Path

from facerange.gate import write_trace
from facerange.scene import load_scene

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


def main() -> None:
    bundle = load_scene(CONFIG_DIR / "scene_default.yaml")
    samples = bundle.synthesize_trace()
    out = CONFIG_DIR / "reference_trace.csv"
    write_trace(out, samples)
    motion_s = sum(seg.end - seg.start for seg in bundle.segments)
    print(
        f"wrote {out} ({len(samples)} samples, {bundle.trace.duration_s} s, "
        f"motion {motion_s / bundle.trace.duration_s:.0%} of horizon)"
    )


if __name__ == "__main__":
    main()

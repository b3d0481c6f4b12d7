"""Face-screen distance estimation from inter-eye pixel measurements.

Library layout:

- ``geometry``: pixel <-> metric conversions under the angular camera model
- ``viewers``: per-face polar positioning and the multi-viewer center
- ``gate``: motion-gated camera duty cycling over accelerometer streams
- ``scene``: synthetic ground-truth scenes, detector emulation, calibration
- ``display``: distance -> font size policy with hysteresis
- ``harness``: experiment runners, reports, and config loading
- ``cli``: the ``facerange`` command
"""

from .display import DisplayDecision, FontPolicy, apply_hysteresis, font_size_for
from .errors import (
    AlignmentError,
    ClockError,
    ConfigError,
    ConvergenceError,
    DomainError,
    EmptySetError,
    FaceRangeError,
    MalformedLogError,
    OutOfFrameError,
    TraceSpecError,
)
from .gate import (
    EventKind,
    GateConfig,
    GateEvent,
    GateState,
    Mode,
    MotionSample,
    detect_motion,
    duty_cycle,
    run_trace,
    step,
)
from .geometry import (
    CameraIntrinsics,
    EyeObservation,
    InterpupillaryDistance,
    UserPosition,
    angular_fraction,
    estimate_distance,
    project_eye_distance,
)
from .scene import (
    DetectionFrame,
    Lighting,
    MotionSegment,
    NoiseModel,
    Scene,
    SceneViewer,
    calibrate_noise,
    render_frame,
    synthesize_accel_trace,
)
from .viewers import (
    CenterPosition,
    ViewerSet,
    compute_center,
    estimate_bearing,
    locate_viewer,
    objective_value,
    pairwise_distance,
)

__version__ = "0.1.0"

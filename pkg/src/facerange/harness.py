"""Experiment harness: config loading, runners, and report files.

Each runner is a pure function of its config and seed.  Reports are
written as header-row CSV plus a JSON run manifest (config echo, seed,
random-stream algorithm, versions) so identical invocations produce
byte-identical output files.

Random streams are keyed as (seed, stream id, substream index) through
NumPy's SeedSequence, so the runners never share or reuse draws.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np
import yaml

from .display import (
    DEFAULT_HYSTERESIS_BAND_PT,
    DisplayDecision,
    FontPolicy,
    apply_hysteresis,
    font_size_for,
)
from .errors import AlignmentError, ConfigError
from .gate import (
    GateConfig,
    GateEvent,
    EventKind,
    MotionSample,
    duty_cycle,
    format_event_log,
    read_trace,
    run_trace,
    validate_event_log,
)
from .geometry import CameraIntrinsics, InterpupillaryDistance
from .scene import (
    DetectionFrame,
    Lighting,
    NoiseModel,
    SceneBundle,
    calibrate_noise,
    format_frame_log,
    load_scene,
    render_frame,
    simulate_distance_estimates,
)
from .viewers import ViewerSet, compute_center, locate_viewer

# Stream ids for (seed, stream, ...) keying; never reuse across runners.
_ACCURACY_STREAM = 1
_LATENCY_STREAM = 2
_CALIBRATE_STREAM = 3
_VERIFY_STREAM = 4

_LIGHTING_ORDER = {level: i for i, level in enumerate(Lighting)}


# --- configuration -----------------------------------------------------------

@dataclass(frozen=True)
class AccuracySettings:
    distances_cm: tuple[float, ...] = (30.0, 40.0, 50.0, 60.0, 70.0)
    lightings: tuple[Lighting, ...] = (Lighting.DARK, Lighting.MODEST, Lighting.BRIGHT)
    targets_mse_cm2: Mapping[Lighting, float] = field(
        default_factory=lambda: {
            Lighting.DARK: 0.6761,
            Lighting.MODEST: 0.8976,
            Lighting.BRIGHT: 2.3878,
        }
    )
    ipd_cm: float = 6.3
    trials: int = 100_000
    calibration_trials: int = 20_000


@dataclass(frozen=True)
class PowerSettings:
    trace_path: Path | None = None
    base_power_w: float = 0.3
    camera_power_w: float = 1.2
    horizon_s: float | None = None


@dataclass(frozen=True)
class LatencySettings:
    capture_delay_s: float = 0.30
    detection_delay_s: float = 0.45
    policy_delay_s: float = 0.05
    jitter_scale_s: float = 0.52
    events: int = 1000


@dataclass(frozen=True)
class ReplaySettings:
    frame_rate_hz: float = 10.0
    align_tolerance_s: float = 0.5
    assumed_ipd_cm: float = 6.3


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one experiment run needs, resolved and validated."""

    scene_path: Path
    bundle: SceneBundle
    gate: GateConfig
    font_policy: FontPolicy
    hysteresis_band_pt: float
    seed: int
    trials: int
    out_dir: Path
    accuracy: AccuracySettings
    power: PowerSettings
    latency: LatencySettings
    replay: ReplaySettings
    raw: Mapping = field(default_factory=dict)

    @property
    def scene(self):
        return self.bundle.scene

    @property
    def noise(self) -> NoiseModel:
        """Scene noise levels, reseeded with the experiment seed."""
        return NoiseModel(sigma_px=self.bundle.noise.sigma_px, seed=self.seed)


def _parse_lighting(name) -> Lighting:
    try:
        return Lighting(str(name).lower())
    except ValueError:
        raise ConfigError(f"unknown lighting level {name!r}") from None


def load_experiment_config(
    path: str | Path,
    seed: int | None = None,
    out_dir: str | Path | None = None,
    trials: int | None = None,
) -> ExperimentConfig:
    """Load an experiment YAML file, applying CLI overrides.

    Relative paths inside the file resolve against the file's directory.
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file {path} does not exist")
    data = yaml.safe_load(path.read_text())
    if not isinstance(data, Mapping):
        raise ConfigError(f"config file {path} is not a mapping")
    base = path.parent

    try:
        scene_path = base / str(data["scene"])
        if not scene_path.exists():
            raise ConfigError(f"scene file {scene_path} does not exist")
        bundle = load_scene(scene_path)

        gate_data = data.get("gate", {})
        gate = GateConfig(
            motion_threshold=float(gate_data.get("motion_threshold_ms2", 0.8)),
            window=float(gate_data.get("window_s", 0.25)),
            stationary_timeout=float(gate_data.get("stationary_timeout_s", 2.0)),
            min_capture_interval=float(gate_data.get("min_capture_interval_s", 0.5)),
        )

        policy_data = data.get("font_policy", {})
        if "breakpoints_cm_pt" in policy_data:
            policy = FontPolicy(
                breakpoints=tuple(
                    (float(d), float(s)) for d, s in policy_data["breakpoints_cm_pt"]
                ),
                min_size=policy_data.get("min_size_pt"),
                max_size=policy_data.get("max_size_pt"),
            )
        else:
            policy = FontPolicy()
        band = float(policy_data.get("hysteresis_band_pt", DEFAULT_HYSTERESIS_BAND_PT))

        acc_data = data.get("accuracy", {})
        accuracy = AccuracySettings(
            distances_cm=tuple(float(d) for d in acc_data.get("distances_cm", (30, 40, 50, 60, 70))),
            lightings=tuple(
                _parse_lighting(l) for l in acc_data.get("lightings", ("dark", "modest", "bright"))
            ),
            targets_mse_cm2={
                _parse_lighting(k): float(v)
                for k, v in acc_data.get(
                    "targets_mse_cm2", {"dark": 0.6761, "modest": 0.8976, "bright": 2.3878}
                ).items()
            },
            ipd_cm=float(acc_data.get("ipd_cm", 6.3)),
            trials=int(acc_data.get("trials", 100_000)),
            calibration_trials=int(acc_data.get("calibration_trials", 20_000)),
        )

        power_data = data.get("power", {})
        trace_path = power_data.get("trace")
        if trace_path is not None:
            trace_path = base / str(trace_path)
            if not trace_path.exists():
                raise ConfigError(f"trace file {trace_path} does not exist")
        power = PowerSettings(
            trace_path=trace_path,
            base_power_w=float(power_data.get("base_power_w", 0.3)),
            camera_power_w=float(power_data.get("camera_power_w", 1.2)),
            horizon_s=(
                float(power_data["horizon_s"]) if "horizon_s" in power_data else None
            ),
        )

        lat_data = data.get("latency", {})
        latency = LatencySettings(
            capture_delay_s=float(lat_data.get("capture_delay_s", 0.30)),
            detection_delay_s=float(lat_data.get("detection_delay_s", 0.45)),
            policy_delay_s=float(lat_data.get("policy_delay_s", 0.05)),
            jitter_scale_s=float(lat_data.get("jitter_scale_s", 0.52)),
            events=int(lat_data.get("events", 1000)),
        )

        replay_data = data.get("replay", {})
        replay_settings = ReplaySettings(
            frame_rate_hz=float(replay_data.get("frame_rate_hz", 10.0)),
            align_tolerance_s=float(replay_data.get("align_tolerance_s", 0.5)),
            assumed_ipd_cm=float(replay_data.get("assumed_ipd_cm", 6.3)),
        )

        resolved_seed = int(data.get("seed", 0)) if seed is None else int(seed)
        resolved_trials = int(data.get("trials", accuracy.trials)) if trials is None else int(trials)
        resolved_out = Path(data.get("out_dir", "out")) if out_dir is None else Path(out_dir)
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad config file {path}: {exc}") from exc

    if resolved_trials < 1:
        raise ConfigError("trial count must be >= 1")
    if resolved_seed < 0:
        raise ConfigError("seed must be a nonnegative integer")

    return ExperimentConfig(
        scene_path=scene_path,
        bundle=bundle,
        gate=gate,
        font_policy=policy,
        hysteresis_band_pt=band,
        seed=resolved_seed,
        trials=resolved_trials,
        out_dir=resolved_out,
        accuracy=accuracy,
        power=power,
        latency=latency,
        replay=replay_settings,
        raw=dict(data),
    )


# --- accuracy ---------------------------------------------------------------

@dataclass(frozen=True)
class AccuracyRow:
    lighting: Lighting
    distance_cm: float
    mean_estimate_cm: float
    mse_cm2: float
    rmse_cm: float
    trials: int
    clamped: int


@dataclass(frozen=True)
class AccuracySummary:
    lighting: Lighting
    sigma_px: float
    mse_cm2: float
    rmse_cm: float
    trials: int


@dataclass(frozen=True)
class AccuracyReport:
    rows: tuple[AccuracyRow, ...]
    summaries: tuple[AccuracySummary, ...]
    seed: int

    def summary_for(self, lighting: Lighting) -> AccuracySummary:
        for s in self.summaries:
            if s.lighting is lighting:
                return s
        raise KeyError(lighting)


def run_accuracy(
    config: ExperimentConfig,
    trials: int | None = None,
    noise: NoiseModel | None = None,
) -> AccuracyReport:
    """Monte-Carlo ranging accuracy per (lighting, distance).

    Renders ``trials`` noisy measurements of a single on-axis viewer at each
    configured distance under each lighting level's pixel noise, estimates
    the distance back, and aggregates MSE/RMSE.  Clamped draws are counted
    and excluded.  Rows are sorted by (lighting, distance); output is a
    pure function of (config, seed).
    """
    settings = config.accuracy
    n_trials = trials if trials is not None else settings.trials
    if n_trials < 1:
        raise ConfigError("trial count must be >= 1")
    noise_model = noise if noise is not None else config.noise
    ipd = InterpupillaryDistance(settings.ipd_cm)
    cam = config.scene.cam

    rows = []
    summaries = []
    lightings = sorted(set(settings.lightings), key=_LIGHTING_ORDER.get)
    distances = sorted(settings.distances_cm)
    row_index = 0
    for lighting in lightings:
        sigma = noise_model.sigma_for(lighting)
        pooled_sq = 0.0
        pooled_n = 0
        for distance in distances:
            rng = np.random.default_rng((config.seed, _ACCURACY_STREAM, row_index))
            z = rng.standard_normal(size=(1, n_trials))
            est = simulate_distance_estimates([distance], cam, ipd, sigma, z)[0]
            valid = ~np.isnan(est)
            n_valid = int(valid.sum())
            if n_valid == 0:
                raise ConfigError(
                    f"all {n_trials} trials clamped at distance {distance} cm; "
                    "noise level is not usable"
                )
            err_sq = (est[valid] - distance) ** 2
            mse = float(err_sq.mean())
            rows.append(
                AccuracyRow(
                    lighting=lighting,
                    distance_cm=distance,
                    mean_estimate_cm=float(est[valid].mean()),
                    mse_cm2=mse,
                    rmse_cm=math.sqrt(mse),
                    trials=n_valid,
                    clamped=n_trials - n_valid,
                )
            )
            pooled_sq += float(err_sq.sum())
            pooled_n += n_valid
            row_index += 1
        pooled_mse = pooled_sq / pooled_n
        summaries.append(
            AccuracySummary(
                lighting=lighting,
                sigma_px=sigma,
                mse_cm2=pooled_mse,
                rmse_cm=math.sqrt(pooled_mse),
                trials=pooled_n,
            )
        )
    return AccuracyReport(rows=tuple(rows), summaries=tuple(summaries), seed=config.seed)


# --- calibration ------------------------------------------------------------

@dataclass(frozen=True)
class CalibrationRow:
    lighting: Lighting
    target_mse_cm2: float
    sigma_px: float
    achieved_mse_cm2: float
    trials: int


@dataclass(frozen=True)
class CalibrationReport:
    rows: tuple[CalibrationRow, ...]
    seed: int

    def noise_model(self, seed: int | None = None) -> NoiseModel:
        """Noise model carrying the calibrated sigmas."""
        return NoiseModel(
            sigma_px={row.lighting: row.sigma_px for row in self.rows},
            seed=self.seed if seed is None else seed,
        )


def run_calibration(config: ExperimentConfig, trials: int | None = None) -> CalibrationReport:
    """Fit a pixel-noise sigma per lighting level to its target MSE.

    After the monotone search, each sigma is re-checked with an independent
    stream; the achieved MSE lands within Monte-Carlo error of the target.
    """
    settings = config.accuracy
    n_trials = trials if trials is not None else settings.calibration_trials
    ipd = InterpupillaryDistance(settings.ipd_cm)
    cam = config.scene.cam
    distances = sorted(settings.distances_cm)

    rows = []
    for i, lighting in enumerate(sorted(set(settings.lightings), key=_LIGHTING_ORDER.get)):
        try:
            target = settings.targets_mse_cm2[lighting]
        except KeyError:
            raise ConfigError(f"no MSE target configured for {lighting.value}") from None
        sigma = calibrate_noise(
            target,
            distances,
            cam,
            ipd,
            trials=n_trials,
            seed=(config.seed, _CALIBRATE_STREAM, i),
        )
        verify_rng = np.random.default_rng((config.seed, _VERIFY_STREAM, i))
        z = verify_rng.standard_normal(size=(len(distances), n_trials))
        est = simulate_distance_estimates(distances, cam, ipd, sigma, z)
        d_true = np.asarray(distances, dtype=float)[:, None]
        achieved = float(np.nanmean((est - d_true) ** 2))
        rows.append(
            CalibrationRow(
                lighting=lighting,
                target_mse_cm2=target,
                sigma_px=sigma,
                achieved_mse_cm2=achieved,
                trials=n_trials,
            )
        )
    return CalibrationReport(rows=tuple(rows), seed=config.seed)


# --- power ------------------------------------------------------------------

@dataclass(frozen=True)
class EnergyReport:
    duty_cycle: float
    captures: int
    open_time_s: float
    horizon_s: float
    energy_always_on_j: float
    energy_gated_j: float
    camera_energy_saving: float
    total_energy_saving: float


def run_power(config: ExperimentConfig) -> tuple[EnergyReport, list[GateEvent]]:
    """Replay the accelerometer trace through the gate and price the result.

    The energy proxy is linear: a fixed baseline plus a camera term
    proportional to open time.  Always-on keeps the camera open for the
    whole horizon.  Returns the report and the raw event log.
    """
    if config.power.trace_path is not None:
        samples = read_trace(config.power.trace_path)
    else:
        samples = config.bundle.synthesize_trace()
    if not samples:
        raise ConfigError("power trace is empty")
    events = run_trace(samples, config.gate)

    if config.power.horizon_s is not None:
        horizon = config.power.horizon_s
    elif len(samples) > 1:
        horizon = samples[-1].timestamp + (samples[1].timestamp - samples[0].timestamp)
    else:
        horizon = samples[-1].timestamp or 1.0

    duty = duty_cycle(events, horizon)
    open_time = duty * horizon
    base = config.power.base_power_w
    camera = config.power.camera_power_w
    always_on = (base + camera) * horizon
    gated = base * horizon + camera * open_time
    report = EnergyReport(
        duty_cycle=duty,
        captures=sum(1 for e in events if e.kind is EventKind.CAPTURE),
        open_time_s=open_time,
        horizon_s=horizon,
        energy_always_on_j=always_on,
        energy_gated_j=gated,
        camera_energy_saving=1.0 - duty,
        total_energy_saving=(always_on - gated) / always_on,
    )
    return report, events


# --- latency ----------------------------------------------------------------

@dataclass(frozen=True)
class LatencyReport:
    latencies_s: tuple[float, ...]  # sorted ascending
    events: int

    def cdf(self) -> list[tuple[float, float]]:
        """Empirical CDF as (latency, cumulative probability) rows."""
        n = len(self.latencies_s)
        return [(lat, (i + 1) / n) for i, lat in enumerate(self.latencies_s)]

    def probability_under(self, threshold_s: float) -> float:
        return sum(1 for lat in self.latencies_s if lat < threshold_s) / len(self.latencies_s)


def run_latency(config: ExperimentConfig, events: int | None = None) -> LatencyReport:
    """Simulate motion-event-to-font-update latency.

    Latency is modeled, not measured: fixed capture, detection, and policy
    delays from the config plus exponential jitter.  The delays are inputs;
    the CDF is the output.
    """
    n = events if events is not None else config.latency.events
    if n < 1:
        raise ConfigError("latency simulation needs at least one event")
    ls = config.latency
    base = ls.capture_delay_s + ls.detection_delay_s + ls.policy_delay_s
    rng = np.random.default_rng((config.seed, _LATENCY_STREAM))
    jitter = rng.exponential(ls.jitter_scale_s, size=n) if ls.jitter_scale_s > 0 else np.zeros(n)
    latencies = np.sort(base + jitter)
    return LatencyReport(latencies_s=tuple(float(x) for x in latencies), events=n)


# --- replay -----------------------------------------------------------------

def replay(
    frames: Sequence[DetectionFrame],
    gate_events: Sequence[GateEvent],
    policy: FontPolicy,
    cam: CameraIntrinsics,
    assumed_ipd: InterpupillaryDistance = InterpupillaryDistance(),
    hysteresis_band: float = DEFAULT_HYSTERESIS_BAND_PT,
    align_tolerance: float = 0.5,
) -> list[tuple[float, DisplayDecision]]:
    """Drive the full pipeline over time-aligned frame and event logs.

    For each capture event: take the nearest frame at or after it (within
    ``align_tolerance`` seconds, else AlignmentError), locate every
    unclamped face, compute the viewing center, interpolate the font size,
    and fold it through hysteresis.  Returns (capture time, decision)
    pairs; frames whose detections are all clamped yield no decision.
    """
    validate_event_log(gate_events)
    for a, b in zip(frames, frames[1:]):
        if b.timestamp < a.timestamp:
            raise AlignmentError("frame log is not sorted by timestamp")

    decisions: list[tuple[float, DisplayDecision]] = []
    previous: DisplayDecision | None = None
    fi = 0
    for ev in gate_events:
        if ev.kind is not EventKind.CAPTURE:
            continue
        while fi < len(frames) and frames[fi].timestamp < ev.timestamp:
            fi += 1
        if fi >= len(frames) or frames[fi].timestamp - ev.timestamp > align_tolerance:
            raise AlignmentError(
                f"capture at {ev.timestamp} s has no frame within {align_tolerance} s"
            )
        frame = frames[fi]
        observations = [
            obs for obs, clamped in zip(frame.observations, frame.clamped) if not clamped
        ]
        if not observations:
            continue
        positions = [locate_viewer(obs, cam, assumed_ipd) for obs in observations]
        center = compute_center(ViewerSet(positions))
        candidate = font_size_for(center, policy)
        previous = apply_hysteresis(previous, candidate, hysteresis_band, source_center=center)
        decisions.append((ev.timestamp, previous))
    return decisions


@dataclass(frozen=True)
class ReplayArtifacts:
    frames: tuple[DetectionFrame, ...]
    events: tuple[GateEvent, ...]
    decisions: tuple[tuple[float, DisplayDecision], ...]


def run_replay(config: ExperimentConfig) -> ReplayArtifacts:
    """Synthesize trace and frames from the scene, gate them, and replay."""
    if config.power.trace_path is not None:
        samples = read_trace(config.power.trace_path)
    else:
        samples = config.bundle.synthesize_trace()
    if not samples:
        raise ConfigError("replay needs a non-empty trace")
    events = run_trace(samples, config.gate)

    duration = samples[-1].timestamp
    fps = config.replay.frame_rate_hz
    n_frames = int(math.floor(duration * fps)) + 1
    noise = config.noise
    frames = [
        render_frame(config.scene, noise, k, timestamp=k / fps) for k in range(n_frames)
    ]
    decisions = replay(
        frames,
        events,
        config.font_policy,
        config.scene.cam,
        assumed_ipd=InterpupillaryDistance(config.replay.assumed_ipd_cm),
        hysteresis_band=config.hysteresis_band_pt,
        align_tolerance=config.replay.align_tolerance_s,
    )
    return ReplayArtifacts(
        frames=tuple(frames), events=tuple(events), decisions=tuple(decisions)
    )


# --- report files -----------------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, Lighting):
        return value.value
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    lines = [",".join(header) + "\n"]
    lines.extend(",".join(_fmt(v) for v in row) + "\n" for row in rows)
    path.write_text("".join(lines))


def write_manifest(out_dir: Path, command: str, config: ExperimentConfig) -> Path:
    """Machine-readable run manifest: config echo, seed, RNG, versions.

    Deliberately contains no wall-clock data so reruns are byte-identical.
    """
    try:
        from importlib.metadata import version

        pkg_version = version("facerange")
    except Exception:
        pkg_version = "unknown"
    manifest = {
        "command": command,
        "seed": config.seed,
        "trials": config.trials,
        "scene_file": str(config.scene_path),
        "rng": "numpy-pcg64",
        "config": _jsonable(config.raw),
        "versions": {
            "facerange": pkg_version,
            "numpy": np.__version__,
            "python": sys.version.split()[0],
        },
    }
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return path


def _jsonable(value):
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Path):
        return str(value)
    return value


def write_accuracy_report(report: AccuracyReport, out_dir: Path) -> list[Path]:
    rows_path = out_dir / "accuracy.csv"
    _write_csv(
        rows_path,
        ["lighting", "distance_cm", "mean_estimate_cm", "mse_cm2", "rmse_cm", "trials", "clamped"],
        (
            (r.lighting, r.distance_cm, r.mean_estimate_cm, r.mse_cm2, r.rmse_cm, r.trials, r.clamped)
            for r in report.rows
        ),
    )
    summary_path = out_dir / "accuracy_summary.csv"
    _write_csv(
        summary_path,
        ["lighting", "sigma_px", "mse_cm2", "rmse_cm", "trials"],
        ((s.lighting, s.sigma_px, s.mse_cm2, s.rmse_cm, s.trials) for s in report.summaries),
    )
    return [rows_path, summary_path]


def write_calibration_report(report: CalibrationReport, out_dir: Path) -> list[Path]:
    csv_path = out_dir / "calibration.csv"
    _write_csv(
        csv_path,
        ["lighting", "target_mse_cm2", "sigma_px", "achieved_mse_cm2", "trials"],
        (
            (r.lighting, r.target_mse_cm2, r.sigma_px, r.achieved_mse_cm2, r.trials)
            for r in report.rows
        ),
    )
    noise_path = out_dir / "calibrated_noise.yaml"
    noise_path.write_text(
        "# paste into the scene file's noise section\n"
        + yaml.safe_dump(
            {"noise": {"sigma_px": {r.lighting.value: float(r.sigma_px) for r in report.rows}}},
            sort_keys=True,
        )
    )
    return [csv_path, noise_path]


def write_energy_report(
    report: EnergyReport, events: Sequence[GateEvent], out_dir: Path
) -> list[Path]:
    csv_path = out_dir / "power.csv"
    _write_csv(
        csv_path,
        [
            "duty_cycle",
            "captures",
            "open_time_s",
            "horizon_s",
            "energy_always_on_j",
            "energy_gated_j",
            "camera_energy_saving",
            "total_energy_saving",
        ],
        [
            (
                report.duty_cycle,
                report.captures,
                report.open_time_s,
                report.horizon_s,
                report.energy_always_on_j,
                report.energy_gated_j,
                report.camera_energy_saving,
                report.total_energy_saving,
            )
        ],
    )
    log_path = out_dir / "gate_events.log"
    log_path.write_text(format_event_log(events))
    return [csv_path, log_path]


def write_latency_report(report: LatencyReport, out_dir: Path) -> list[Path]:
    cdf_path = out_dir / "latency_cdf.csv"
    _write_csv(cdf_path, ["latency_s", "cum_prob"], report.cdf())
    summary_path = out_dir / "latency_summary.csv"
    lat = report.latencies_s
    n = len(lat)
    _write_csv(
        summary_path,
        ["events", "p_under_2s", "mean_s", "p50_s", "p90_s", "max_s"],
        [
            (
                n,
                report.probability_under(2.0),
                sum(lat) / n,
                lat[(n - 1) // 2],
                lat[min(n - 1, (9 * n) // 10)],
                lat[-1],
            )
        ],
    )
    return [cdf_path, summary_path]


def write_replay_artifacts(artifacts: ReplayArtifacts, out_dir: Path) -> list[Path]:
    frames_path = out_dir / "frames.log"
    frames_path.write_text(format_frame_log(artifacts.frames))
    events_path = out_dir / "gate_events.log"
    events_path.write_text(format_event_log(artifacts.events))
    decisions_path = out_dir / "decisions.csv"
    _write_csv(
        decisions_path,
        ["timestamp_s", "font_size_pt", "center_distance_cm", "center_bearing_rad", "hysteresis_applied"],
        (
            (
                t,
                d.font_size,
                d.source_center.distance if d.source_center else float("nan"),
                d.source_center.bearing if d.source_center else float("nan"),
                int(d.hysteresis_applied),
            )
            for t, d in artifacts.decisions
        ),
    )
    return [frames_path, events_path, decisions_path]

"""Command-line experiment runner.

Subcommands mirror the evaluation axes: ranging accuracy under noise,
camera duty-cycle energy, modeled response latency, end-to-end replay,
and noise calibration.  Every run writes CSV reports plus a manifest into
the output directory; identical config and seed give byte-identical files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .errors import FaceRangeError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facerange",
        description="face-screen distance experiments: simulate, gate, and report",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("accuracy", "Monte-Carlo ranging accuracy per lighting level"),
        ("power", "camera duty cycle and energy proxy on an accelerometer trace"),
        ("latency", "modeled motion-to-font-update latency CDF"),
        ("replay", "full pipeline replay: trace -> gate -> frames -> font sizes"),
        ("calibrate", "fit pixel noise to the target MSE per lighting level"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", type=Path, required=True, help="experiment YAML file")
        p.add_argument("--seed", type=int, default=None, help="override the config seed")
        p.add_argument("--out", type=Path, default=None, help="override the output directory")
        p.add_argument("--trials", type=int, default=None, help="override the trial/event count")
    return parser


def _run(args: argparse.Namespace) -> list[Path]:
    config = harness.load_experiment_config(
        args.config, seed=args.seed, out_dir=args.out, trials=args.trials
    )
    out_dir = config.out_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    if args.command == "accuracy":
        report = harness.run_accuracy(config, trials=args.trials)
        written += harness.write_accuracy_report(report, out_dir)
        for s in report.summaries:
            print(
                f"{s.lighting.value}: sigma={s.sigma_px:.4f} px  "
                f"MSE={s.mse_cm2:.4f} cm^2  RMSE={s.rmse_cm:.4f} cm  ({s.trials} trials)"
            )
    elif args.command == "calibrate":
        report = harness.run_calibration(config, trials=args.trials)
        written += harness.write_calibration_report(report, out_dir)
        for r in report.rows:
            print(
                f"{r.lighting.value}: sigma={r.sigma_px:.4f} px for target "
                f"MSE={r.target_mse_cm2} cm^2 (achieved {r.achieved_mse_cm2:.4f})"
            )
    elif args.command == "power":
        report, events = harness.run_power(config)
        written += harness.write_energy_report(report, events, out_dir)
        print(
            f"duty cycle {report.duty_cycle:.4f} over {report.horizon_s:.1f} s, "
            f"{report.captures} captures"
        )
        print(
            f"camera energy saving {report.camera_energy_saving:.1%}, "
            f"total {report.total_energy_saving:.1%} vs always-on"
        )
    elif args.command == "latency":
        report = harness.run_latency(config, events=args.trials)
        written += harness.write_latency_report(report, out_dir)
        print(
            f"{report.events} events, P(latency < 2 s) = "
            f"{report.probability_under(2.0):.4f}"
        )
    elif args.command == "replay":
        artifacts = harness.run_replay(config)
        written += harness.write_replay_artifacts(artifacts, out_dir)
        print(
            f"{len(artifacts.events)} gate events, {len(artifacts.decisions)} font decisions"
        )

    written.append(harness.write_manifest(out_dir, args.command, config))
    for path in written:
        print(f"wrote {path}")
    return written


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _run(args)
    except FaceRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

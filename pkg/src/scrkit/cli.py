"""Command line entry point (``scrkit``).

Subcommands: design, workspace, snake, evaluate, bend, serve.  Lengths and
angles are given and printed in millimeters and degrees; pass ``--si`` to
work in meters and radians instead.  Data files (CSV/JSON) are always SI.

Exit codes: 0 success, 1 runtime failure, 2 validation failure.  Failures
also emit one machine-readable JSON object on stderr.
"""

import argparse
import json
import math
import sys
from dataclasses import asdict
from pathlib import Path

from scrkit import design, evaluation, geometry, kinematics, snake, teleop

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except ValueError as exc:
        _emit_error("validation", str(exc))
        return 2
    except OSError as exc:
        _emit_error("runtime", str(exc))
        return 1
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        _emit_error("runtime", f"{type(exc).__name__}: {exc}")
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrkit",
        description="Design, kinematics and teleoperation toolkit for the "
        "cable-driven soft continuum robot.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("design", help="run the module design pipeline")
    p.add_argument("--length", type=float, default=100.0, help="module length (mm)")
    p.add_argument("--width", type=float, default=90.0, help="module width (mm)")
    p.add_argument("--force", type=float, default=50.0, help="applied force (N)")
    p.add_argument("--sigma", type=float, default=160000.0, help="allowable bending stress (N/m^2)")
    p.add_argument("--density", type=float, default=20.0, help="module density (kg/m^3)")
    p.add_argument("--r-range", default="25:30", help="inner radius range lo:hi (mm)")
    p.add_argument("--h-range", default="30:35", help="fringe height range lo:hi (mm)")
    p.add_argument("--range-step", type=float, default=1.0, help="grid step (mm)")
    p.add_argument("--max-n", type=int, default=10, help="fringe-count loop limit")
    p.add_argument(
        "--n-fringes",
        type=int,
        default=None,
        help="pin the fringe count instead of running the loop",
    )
    p.add_argument("--json", dest="json_path", help="write the full report as JSON")
    _add_si(p)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("workspace", help="sample the reachable workspace")
    p.add_argument("--steps", type=int, default=20, help="grid points per joint")
    p.add_argument("--theta-lo", type=float, default=0.0, help="sweep lower bound (deg)")
    p.add_argument("--theta-hi", type=float, default=90.0, help="sweep upper bound (deg)")
    p.add_argument(
        "--link-lengths",
        default="100,100,100,100",
        help="four link lengths (mm, comma separated)",
    )
    p.add_argument("--csv", dest="csv_path", help="write the point cloud as CSV")
    p.add_argument("--json", dest="json_path", help="write the extents summary as JSON")
    _add_si(p)
    p.set_defaults(func=cmd_workspace)

    p = sub.add_parser("snake", help="planar chain pose in snake mode")
    p.add_argument("--angles", default="25,25,25,25", help="joint angles (deg, comma separated)")
    p.add_argument(
        "--link-lengths",
        default=None,
        help="link lengths (mm, comma separated; default 100 each)",
    )
    p.add_argument("--json", dest="json_path", help="write the pose as JSON")
    p.add_argument("--csv", dest="csv_path", help="write joint coordinates as CSV")
    p.add_argument(
        "--debug-terms",
        action="store_true",
        help="include internal scratch arrays in the JSON output",
    )
    _add_si(p)
    p.set_defaults(func=cmd_snake)

    p = sub.add_parser("evaluate", help="score locomotion against range thresholds")
    p.add_argument("--max-speed", type=float, default=0.37, help="maximum speed (m/s)")
    p.add_argument("--body-length", type=float, default=700.0, help="robot length (mm)")
    p.add_argument("--body-height", type=float, default=120.0, help="robot height (mm)")
    p.add_argument("--step-height", type=float, default=30.0, help="highest crossable step (mm)")
    p.add_argument(
        "--obstacle-radius", type=float, default=55.0,
        help="largest crossable semicircular obstacle radius (mm)",
    )
    p.add_argument("--slope", type=float, default=66.0, help="steepest climbable slope (deg)")
    p.add_argument("--wheel-radius", type=float, default=35.0, help="wheel radius (mm)")
    p.add_argument("--metrics", help="read metrics from a JSON file (SI) instead of flags")
    p.add_argument("--thresholds", help="range thresholds file (TOML or JSON)")
    p.add_argument("--json", dest="json_path", help="write the report as JSON")
    _add_si(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("bend", help="module bend angle from a measured chord")
    p.add_argument("--chord", type=float, required=True, help="chord length (mm)")
    p.add_argument("--radius", type=float, help="arc radius (mm)")
    p.add_argument(
        "--unequal-radii",
        action="store_true",
        help="expert: use the unequal-radii form 2*asin(Cl/(r1*r2)) "
        "(not scale invariant, see docs)",
    )
    p.add_argument("--radius-1", type=float, help="first arc radius (mm)")
    p.add_argument("--radius-2", type=float, help="second arc radius (mm)")
    _add_si(p)
    p.set_defaults(func=cmd_bend)

    p = sub.add_parser("serve", help="host the teleop simulator over HTTP/WebSocket")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--config", help="simulator config file (TOML or JSON)")
    p.add_argument("--ui-dir", help="static UI directory (default: frontend/dist if present)")
    p.add_argument("--log-trajectory", help="append per-tick pose rows to this CSV")
    p.set_defaults(func=cmd_serve)

    return parser


def _add_si(parser) -> None:
    parser.add_argument(
        "--si",
        action="store_true",
        help="use meters/radians instead of millimeters/degrees",
    )


# unit helpers: CLI boundary is mm/deg unless --si


def _to_m(value: float, si: bool) -> float:
    return value if si else value / 1000.0


def _to_rad(value: float, si: bool) -> float:
    return value if si else math.radians(value)


def _fmt_len(meters: float, si: bool) -> str:
    return f"{meters:.6f} m" if si else f"{meters * 1000.0:.3f} mm"


def _fmt_ang(rad: float, si: bool) -> str:
    return f"{rad:.6f} rad" if si else f"{math.degrees(rad):.3f} deg"


def _parse_floats(text: str, what: str) -> list:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"{what} must be comma-separated numbers: {text!r}") from exc
    if not values:
        raise ValueError(f"{what} must not be empty")
    return values


def _parse_range(text: str, step: float, si: bool, what: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"{what} must look like lo:hi, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise ValueError(f"{what} bounds must be numbers: {text!r}") from exc
    if step <= 0:
        raise ValueError(f"--range-step must be > 0, got {step}")
    if hi < lo:
        raise ValueError(f"{what} upper bound is below the lower bound")
    count = int(round((hi - lo) / step)) + 1
    return tuple(_to_m(lo + i * step, si) for i in range(count))


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _emit_error(kind: str, message: str) -> None:
    json.dump({"error": {"kind": kind, "message": message}}, sys.stderr)
    sys.stderr.write("\n")


def _print_table(rows) -> None:
    widths = [max(len(str(row[col])) for row in rows) for col in range(len(rows[0]))]
    for i, row in enumerate(rows):
        print("  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip())
        if i == 0:
            print("  ".join("-" * w for w in widths))


def cmd_design(args) -> int:
    si = args.si
    params = design.MaterialLoadParams(
        density_D=args.density,
        force_F=args.force,
        max_bending_stress_sigma=args.sigma,
    )
    report = design.design_pipeline(
        L=_to_m(args.length, si),
        W=_to_m(args.width, si),
        params=params,
        r_range=_parse_range(args.r_range, args.range_step, si, "--r-range"),
        h_range=_parse_range(args.h_range, args.range_step, si, "--h-range"),
        max_N=args.max_n,
        pinned_N=args.n_fringes,
    )
    module = report.module
    _print_table(
        [
            ("Design parameter", "Value"),
            ("Module length (L)", _fmt_len(module.length_L, si)),
            ("Module width (W)", _fmt_len(module.width_W, si)),
            ("Module thickness (T)", _fmt_len(module.thickness_T, si)),
            ("Outer radius of curvature (R)", _fmt_len(module.outer_radius_R, si)),
            ("Inner radius of curvature (r)", _fmt_len(module.inner_radius_r, si)),
            ("Fringe base (b)", _fmt_len(module.fringe_base_b, si)),
            ("Fringe height (h)", _fmt_len(module.fringe_height_h, si)),
            ("Fringe count (N)", module.fringe_count_N),
            ("Turn angle (theta)", _fmt_ang(module.turn_angle_theta, si)),
        ]
    )
    print(f"mass proxy D*L*W*T: {report.thickness_objective_value:.6g}")
    print(f"fringe-count equation value: {report.fringe_equation_value:.4f}")
    if report.fringe_count_mismatch:
        print(
            f"note: the fringe-count equation gives {report.fringe_equation_value:.2f} "
            f"for these dimensions, which disagrees with N = {module.fringe_count_N}; "
            "reported as-is"
        )
    if report.loop_limit_reached:
        print("note: no fringe count reached a 90 deg turn; best iteration reported")
    if args.json_path:
        _write_json(args.json_path, design.report_to_dict(report))
    return 0


def cmd_workspace(args) -> int:
    si = args.si
    lengths = [_to_m(v, si) for v in _parse_floats(args.link_lengths, "--link-lengths")]
    if len(lengths) != 4:
        raise ValueError(f"--link-lengths needs exactly 4 values, got {len(lengths)}")
    chain = kinematics.four_module_chain(link_lengths=lengths)
    cloud = kinematics.workspace_sample(
        chain,
        steps=args.steps,
        theta_lo=_to_rad(args.theta_lo, si),
        theta_hi=_to_rad(args.theta_hi, si),
    )
    extents = cloud.extents()
    print(f"points: {cloud.points.shape[0]}")
    print(
        "sweep: "
        f"{_fmt_ang(cloud.joint_min, si)} to {_fmt_ang(cloud.joint_max, si)} "
        f"in {cloud.grid_steps} steps per joint"
    )
    for axis in ("x", "y", "z"):
        print(
            f"{axis}: {_fmt_len(extents[axis + '_min'], si)} "
            f"to {_fmt_len(extents[axis + '_max'], si)}"
        )
    if args.csv_path:
        cloud.write_csv(args.csv_path)
    if args.json_path:
        _write_json(args.json_path, cloud.summary())
    return 0


def cmd_snake(args) -> int:
    si = args.si
    angles = [_to_rad(v, si) for v in _parse_floats(args.angles, "--angles")]
    if args.link_lengths is None:
        lengths = [0.1] * len(angles)
    else:
        lengths = [_to_m(v, si) for v in _parse_floats(args.link_lengths, "--link-lengths")]
    pose = snake.planar_pose(angles, lengths)
    payload = snake.pose_payload(pose)
    if args.debug_terms:
        payload["debug_terms"] = {
            key: value.tolist()
            for key, value in snake._scratch_terms(angles, lengths).items()
        }
    rows = [("Joint", "x", "y")]
    for i, (x, y) in enumerate(pose.joint_positions):
        rows.append((i, _fmt_len(x, si), _fmt_len(y, si)))
    _print_table(rows)
    end_x, end_y = pose.joint_positions[-1]
    print(f"end point: ({_fmt_len(end_x, si)}, {_fmt_len(end_y, si)})")
    if args.json_path:
        _write_json(args.json_path, payload)
    if args.csv_path:
        snake.write_pose_csv(pose, args.csv_path)
    return 0


def cmd_evaluate(args) -> int:
    si = args.si
    if args.metrics:
        with open(args.metrics) as fh:
            raw = json.load(fh)
        metrics = evaluation.RobotMetrics(**raw)
    else:
        metrics = evaluation.RobotMetrics(
            max_speed=args.max_speed,
            body_length=_to_m(args.body_length, si),
            body_height=_to_m(args.body_height, si),
            max_step_height=_to_m(args.step_height, si),
            max_obstacle_radius=_to_m(args.obstacle_radius, si),
            max_slope_deg=args.slope,
            wheel_radius=_to_m(args.wheel_radius, si),
        )
    thresholds = (
        evaluation.RangeThresholds.from_file(args.thresholds)
        if args.thresholds
        else evaluation.RangeThresholds.default()
    )
    report = evaluation.classify(metrics, thresholds)
    print(report.to_table())
    if args.json_path:
        payload = {"metrics": asdict(metrics)}
        payload.update(report.to_dict())
        _write_json(args.json_path, payload)
    return 0


def cmd_bend(args) -> int:
    si = args.si
    chord = _to_m(args.chord, si)
    if args.unequal_radii:
        if args.radius_1 is None or args.radius_2 is None:
            raise ValueError("--unequal-radii needs --radius-1 and --radius-2")
        angle = geometry.bend_angle_unequal_radii(
            geometry.ChordGeometry(chord, _to_m(args.radius_1, si), _to_m(args.radius_2, si))
        )
    else:
        if args.radius is None:
            raise ValueError("--radius is required (or use --unequal-radii)")
        radius = _to_m(args.radius, si)
        angle = geometry.bend_angle_equal_radii(geometry.ChordGeometry(chord, radius, radius))
    print(f"bend angle: {_fmt_ang(angle, si)}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from scrkit.service import create_app

    config = _load_sim_config(args.config) if args.config else teleop.SimConfig()
    ui_dir = args.ui_dir
    if ui_dir is None and Path("frontend/dist").is_dir():
        ui_dir = "frontend/dist"
    app = create_app(config=config, ui_dir=ui_dir, trajectory_log=args.log_trajectory)
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    except SystemExit as exc:  # uvicorn exits on bind failure
        if exc.code not in (0, None):
            _emit_error("runtime", f"server failed to start (port {args.port} in use?)")
            return 1
    return 0


def _load_sim_config(path: str) -> teleop.SimConfig:
    p = Path(path)
    if p.suffix.lower() == ".toml":
        with open(p, "rb") as fh:
            raw = tomllib.load(fh)
    else:
        with open(p) as fh:
            raw = json.load(fh)
    known = set(teleop.SimConfig.__dataclass_fields__)
    unknown = set(raw) - known
    if unknown:
        raise ValueError(f"unknown simulator config keys: {sorted(unknown)}")
    return teleop.SimConfig(**raw)


if __name__ == "__main__":
    sys.exit(main())

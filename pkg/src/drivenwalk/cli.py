"""Command-line interface.

Subcommands: simulate | analytic | trajectory | classify | compare | sweep.
Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 numerical
accuracy error.  All file outputs are deterministic: identical inputs give
byte-identical files.
"""

import argparse
import os
import sys

import numpy as np

from .analytic import analytic_distribution, make_params
from .config import build_run_config, parse_angle, parse_config_file
from .errors import AccuracyError, ConfigError, ScheduleExhaustedError, SingularTimeError
from .matio import (
    atomic_write_text,
    fmt_float,
    read_matrix_csv,
    read_trajectory_csv,
    write_json,
    write_matrix_csv,
    write_pgm,
    write_trajectory_csv,
)
from .schedules import ScheduleKind
from .simulator import SpacetimeRecord, WalkConfig, evolve
from .trajectory import (
    Trajectory,
    classify_chain,
    compare_peaks,
    trajectory_from_schedule,
    trajectory_linear,
    trajectory_sinusoidal,
)

__all__ = ["main"]

# CLI flag -> dotted config key.  Flag values override file values.
_FLAG_KEYS = (
    ("steps", "steps"),
    ("theta0", "schedule.theta0"),
    ("omega", "schedule.omega"),
    ("schedule", "schedule.kind"),
    ("table", "schedule.table"),
    ("initial", "initial.kind"),
    ("out", "out.dir"),
    ("formats", "out.formats"),
    ("grid_spacing", "analytic.grid_spacing"),
    ("w", "analytic.w"),
    ("kmax", "trajectory.kmax"),
)


def _merged_values(args):
    values = {}
    if getattr(args, "config", None):
        values.update(parse_config_file(args.config))
    for attr, key in _FLAG_KEYS:
        val = getattr(args, attr, None)
        if val is not None:
            values[key] = str(val)
    return values


def _walk_config(cfg):
    return WalkConfig(
        steps=cfg.steps,
        schedule=cfg.schedule,
        step_params=cfg.step_params,
        initial=cfg.initial,
    )


def _schedule_meta(schedule):
    meta = {"kind": schedule.kind.value}
    if schedule.kind is ScheduleKind.TABULATED:
        meta["table"] = list(schedule.table)
    else:
        meta["theta0"] = schedule.theta0
        meta["omega"] = schedule.omega
    return meta


def _base_meta(command, cfg):
    return {
        "command": command,
        "schedule": _schedule_meta(cfg.schedule),
        "steps": cfg.steps,
        "step_params": {"T": cfg.step_params.T, "X": cfg.step_params.X},
        "w": cfg.w,
        "grid_spacing": cfg.grid_spacing,
        "kmax": cfg.kmax,
        "formats": list(cfg.formats),
    }


def _ensure_out(cfg):
    os.makedirs(cfg.out_dir, exist_ok=True)
    return cfg.out_dir


def _emit(paths, out):
    for p in paths:
        print("wrote %s" % p, file=out)


def cmd_simulate(cfg, out_stream):
    record = evolve(_walk_config(cfg))
    out = _ensure_out(cfg)
    written = []
    if "csv" in cfg.formats:
        for name, matrix in (("P", record.P), ("PR", record.PR), ("PL", record.PL)):
            path = os.path.join(out, name + ".csv")
            write_matrix_csv(path, record.sites, matrix)
            written.append(path)
    if "pgm" in cfg.formats:
        path = os.path.join(out, "P.pgm")
        write_pgm(path, record.P)
        written.append(path)
    if "json" in cfg.formats:
        meta = _base_meta("simulate", cfg)
        meta["rows"] = int(record.P.shape[0])
        meta["cols"] = int(record.P.shape[1])
        meta["files"] = [os.path.basename(p) for p in written]
        path = os.path.join(out, "meta.json")
        write_json(path, meta)
        written.append(path)
    _emit(written, out_stream)
    return 0


def cmd_analytic(cfg, out_stream):
    params = make_params(_walk_config(cfg), w=cfg.w, grid_spacing=cfg.grid_spacing)
    field = analytic_distribution(params, cfg.schedule)
    out = _ensure_out(cfg)
    written = []
    if "csv" in cfg.formats:
        for name, matrix in (("P", field.P), ("PR", field.PR), ("PL", field.PL)):
            path = os.path.join(out, name + ".csv")
            write_matrix_csv(path, field.grid, matrix, absent_rows=field.absent)
            written.append(path)
    if "pgm" in cfg.formats:
        path = os.path.join(out, "P.pgm")
        write_pgm(path, field.P, absent_rows=field.absent)
        written.append(path)
    if "json" in cfg.formats:
        meta = _base_meta("analytic", cfg)
        meta["rows"] = int(field.P.shape[0])
        meta["cols"] = int(field.P.shape[1])
        meta["absent_rows"] = [int(t) for t in np.flatnonzero(field.absent)]
        meta["files"] = [os.path.basename(p) for p in written]
        path = os.path.join(out, "meta.json")
        write_json(path, meta)
        written.append(path)
    _emit(written, out_stream)
    return 0


def _trajectory_for(cfg):
    taus = np.arange(cfg.steps + 1, dtype=np.float64)
    kind = cfg.schedule.kind
    if kind is ScheduleKind.LINEAR:
        xp, xm = trajectory_linear(cfg.schedule.theta0, cfg.schedule.omega, taus)
        return Trajectory(taus=taus, x_plus=xp, x_minus=xm)
    if kind is ScheduleKind.SINUSOIDAL:
        xp, xm = trajectory_sinusoidal(cfg.schedule.theta0, cfg.schedule.omega, taus, cfg.kmax)
        return Trajectory(taus=taus, x_plus=xp, x_minus=xm)
    return trajectory_from_schedule(cfg.schedule, taus)


def cmd_trajectory(cfg, out_stream):
    traj = _trajectory_for(cfg)
    out = _ensure_out(cfg)
    written = []
    path = os.path.join(out, "trajectory.csv")
    write_trajectory_csv(path, traj)
    written.append(path)
    if "json" in cfg.formats:
        meta = _base_meta("trajectory", cfg)
        meta["rows"] = len(traj)
        meta["files"] = [os.path.basename(p) for p in written]
        mpath = os.path.join(out, "meta.json")
        write_json(mpath, meta)
        written.append(mpath)
    _emit(written, out_stream)
    return 0


def cmd_classify(values, out_stream):
    theta0 = parse_angle(values.get("schedule.theta0", "0"))
    omega = parse_angle(values.get("schedule.omega", "0"))
    print(classify_chain(theta0, omega).label, file=out_stream)
    return 0


def cmd_compare(args, out_stream):
    sites, data = read_matrix_csv(args.sim_csv)
    data = np.nan_to_num(data, nan=0.0)
    record = SpacetimeRecord(
        steps=np.arange(data.shape[0]),
        sites=sites.astype(np.int64),
        P=data,
        PR=np.zeros_like(data),
        PL=np.zeros_like(data),
    )
    taus, xp, xm = read_trajectory_csv(args.trajectory_csv)
    report = compare_peaks(record, Trajectory(taus=taus, x_plus=xp, x_minus=xm))
    out_dir = args.out if args.out else "out"
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, "report.json")
    write_json(path, report.to_dict())
    _emit([path], out_stream)
    return 0


def cmd_sweep(args, values, out_stream):
    theta_raw = values.get("schedule.theta0")
    omega_raw = values.get("schedule.omega")
    if not theta_raw:
        raise ConfigError("sweep requires --theta0 with one or more comma-separated angles")
    if not omega_raw:
        raise ConfigError("sweep requires --omega with one or more comma-separated angles")
    thetas = sorted(parse_angle(tok) for tok in theta_raw.split(",") if tok.strip())
    omegas = sorted(parse_angle(tok) for tok in omega_raw.split(",") if tok.strip())
    rows = []
    for t0 in thetas:
        for w in omegas:
            rows.append((t0, w, classify_chain(t0, w).label))
    out_dir = values.get("out.dir", "out")
    os.makedirs(out_dir, exist_ok=True)
    lines = ["theta0,omega,class"]
    for t0, w, label in rows:
        lines.append("%s,%s,%s" % (fmt_float(t0), fmt_float(w), label))
    path = os.path.join(out_dir, "sweep.csv")
    atomic_write_text(path, "\n".join(lines) + "\n")
    written = [path]
    fmt_raw = values.get("out.formats", "csv")
    if "json" in fmt_raw:
        meta = {
            "command": "sweep",
            "theta0": thetas,
            "omega": omegas,
            "rows": len(rows),
            "files": ["sweep.csv"],
        }
        mpath = os.path.join(out_dir, "meta.json")
        write_json(mpath, meta)
        written.append(mpath)
    _emit(written, out_stream)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="drivenwalk",
        description="Discrete-time walk with a driven coin: simulation, "
        "analytic wavefront fields, trajectories, and chain taxonomy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_analytic=True):
        p.add_argument("--config", help="dotted-key config file")
        p.add_argument("--steps", help="number of steps N")
        p.add_argument("--theta0", help="phase parameter (radians or 'pi/60' form)")
        p.add_argument("--omega", help="drive frequency (radians per unit time)")
        p.add_argument("--schedule", help="schedule kind: constant|linear|sinusoidal|tabulated")
        p.add_argument("--table", help="comma-separated angles for tabulated schedules")
        p.add_argument("--initial", help="initial state kind: symmetric|right|left")
        p.add_argument("--out", help="output directory")
        p.add_argument("--formats", help="comma subset of csv,json,pgm")
        if with_analytic:
            p.add_argument("--grid-spacing", dest="grid_spacing", help="xi grid spacing")
            p.add_argument("--w", help="kernel width parameter")
            p.add_argument("--kmax", help="harmonic cutoff for sinusoidal trajectories")

    add_common(sub.add_parser("simulate", help="run the exact walk and export matrices"))
    add_common(sub.add_parser("analytic", help="evaluate the analytic field and export matrices"))
    add_common(sub.add_parser("trajectory", help="export closed-form branch trajectories"))

    p_classify = sub.add_parser("classify", help="print the chain class for (theta0, omega)")
    p_classify.add_argument("--config", help="dotted-key config file")
    p_classify.add_argument("--theta0", help="phase parameter")
    p_classify.add_argument("--omega", help="drive frequency")

    p_compare = sub.add_parser("compare", help="match simulated peaks against a trajectory")
    p_compare.add_argument("sim_csv", help="P matrix CSV from simulate")
    p_compare.add_argument("trajectory_csv", help="trajectory CSV from trajectory")
    p_compare.add_argument("--out", help="output directory")

    p_sweep = sub.add_parser("sweep", help="classification table over a (theta0, omega) grid")
    p_sweep.add_argument("--config", help="dotted-key config file")
    p_sweep.add_argument("--theta0", help="comma-separated theta0 list")
    p_sweep.add_argument("--omega", help="comma-separated omega list")
    p_sweep.add_argument("--out", help="output directory")
    p_sweep.add_argument("--formats", help="comma subset of csv,json")
    return parser


def main(argv=None, out_stream=None, err_stream=None):
    out = out_stream if out_stream is not None else sys.stdout
    err = err_stream if err_stream is not None else sys.stderr
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compare":
            return cmd_compare(args, out)
        values = _merged_values(args)
        if args.command == "classify":
            return cmd_classify(values, out)
        if args.command == "sweep":
            return cmd_sweep(args, values, out)
        cfg = build_run_config(values)
        if args.command == "simulate":
            return cmd_simulate(cfg, out)
        if args.command == "analytic":
            return cmd_analytic(cfg, out)
        if args.command == "trajectory":
            return cmd_trajectory(cfg, out)
        raise ConfigError("unknown command %r" % args.command)
    except (SingularTimeError, AccuracyError) as exc:
        print("error: %s" % exc, file=err)
        return 4
    except (ConfigError, ScheduleExhaustedError, ValueError) as exc:
        print("error: %s" % exc, file=err)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=err)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Run configuration: flat dotted-key config files plus CLI overrides.

Config files are UTF-8 text, one ``key = value`` pair per line, '#' starts
a comment.  Keys are dotted paths (schedule.kind, step.T, out.formats).
Angles accept raw radians or rational multiples of pi written like
"pi/60", "3pi/2", "-pi/4".
"""

import math
import re
from dataclasses import dataclass, field

from .errors import ConfigError
from .schedules import PhaseSchedule, StepParams
from .simulator import Spinor, default_initial

__all__ = [
    "RunConfig",
    "parse_angle",
    "parse_config_file",
    "build_run_config",
    "KNOWN_KEYS",
]

KNOWN_KEYS = (
    "schedule.kind",
    "schedule.theta0",
    "schedule.omega",
    "schedule.table",
    "steps",
    "step.T",
    "step.X",
    "initial.kind",
    "initial.site",
    "analytic.w",
    "analytic.grid_spacing",
    "trajectory.kmax",
    "out.dir",
    "out.formats",
)

_SCHEDULE_KINDS = ("constant", "linear", "sinusoidal", "tabulated")
_INITIAL_KINDS = ("symmetric", "right", "left")
_FORMATS = ("csv", "json", "pgm")

_PI_RE = re.compile(r"^([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)pi(?:/([+-]?(?:\d+(?:\.\d*)?|\.\d+)))?$")


def parse_angle(text):
    """Radians from a numeric literal or a 'pi/60'-style expression."""
    s = str(text).strip().lower().replace(" ", "")
    if s == "":
        raise ConfigError("empty angle value")
    if "pi" in s:
        m = _PI_RE.match(s)
        if not m:
            raise ConfigError("cannot parse angle %r" % text)
        coeff_s = m.group(1)
        if coeff_s in ("", "+"):
            coeff = 1.0
        elif coeff_s == "-":
            coeff = -1.0
        else:
            coeff = float(coeff_s)
        denom = float(m.group(2)) if m.group(2) else 1.0
        if denom == 0.0:
            raise ConfigError("zero denominator in angle %r" % text)
        return coeff * math.pi / denom
    try:
        return float(s)
    except ValueError:
        raise ConfigError("cannot parse angle %r" % text) from None


def parse_config_file(path):
    """Read a dotted-key file into {key: raw string value}."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read().splitlines()
    except OSError as exc:
        raise ConfigError("cannot read config file %s: %s" % (path, exc)) from None
    values = {}
    for i, line in enumerate(raw, start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError("%s: line %d: expected 'key = value'" % (path, i))
        key, val = body.split("=", 1)
        key = key.strip()
        val = val.strip()
        if not key:
            raise ConfigError("%s: line %d: empty key" % (path, i))
        values[key] = val
    return values


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run description shared by all subcommands."""

    schedule: PhaseSchedule
    steps: int
    step_params: StepParams = field(default_factory=StepParams)
    initial: object = None
    w: float = 0.0
    grid_spacing: float = 0.5
    kmax: int = 25
    out_dir: str = "out"
    formats: tuple = ("csv", "json")


def _need_float(values, key, default=None):
    if key not in values:
        return default
    try:
        return float(values[key])
    except ValueError:
        raise ConfigError("config field %s is not a number: %r" % (key, values[key])) from None


def _need_int(values, key, default=None):
    if key not in values:
        return default
    try:
        return int(values[key])
    except ValueError:
        raise ConfigError("config field %s is not an integer: %r" % (key, values[key])) from None


def _build_schedule(values):
    if "schedule.kind" not in values:
        raise ConfigError("missing required config field: schedule.kind")
    kind = values["schedule.kind"].strip().lower()
    if kind not in _SCHEDULE_KINDS:
        raise ConfigError(
            "schedule.kind must be one of %s, got %r" % ("/".join(_SCHEDULE_KINDS), kind)
        )
    theta0 = parse_angle(values.get("schedule.theta0", "0"))
    omega = parse_angle(values.get("schedule.omega", "0"))
    try:
        if kind == "constant":
            return PhaseSchedule.constant(theta0)
        if kind == "linear":
            return PhaseSchedule.linear(theta0, omega)
        if kind == "sinusoidal":
            return PhaseSchedule.sinusoidal(theta0, omega)
        raw = values.get("schedule.table", "")
        entries = [tok for tok in (t.strip() for t in raw.split(",")) if tok]
        if not entries:
            raise ConfigError("tabulated schedule requires schedule.table entries")
        return PhaseSchedule.tabulated([parse_angle(tok) for tok in entries])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _build_initial(values):
    kind = values.get("initial.kind", "symmetric").strip().lower()
    if kind not in _INITIAL_KINDS:
        raise ConfigError(
            "initial.kind must be one of %s, got %r" % ("/".join(_INITIAL_KINDS), kind)
        )
    site = _need_int(values, "initial.site", 0)
    if kind == "symmetric":
        sp = default_initial()
    elif kind == "right":
        sp = Spinor(r=1.0, l=0.0)
    else:
        sp = Spinor(r=0.0, l=1.0)
    return {site: sp}


def build_run_config(values):
    """Resolve a merged {dotted key: string} map into a RunConfig."""
    for key in values:
        if key not in KNOWN_KEYS:
            raise ConfigError("unknown config key: %s" % key)
    schedule = _build_schedule(values)
    if "steps" not in values:
        raise ConfigError("missing required config field: steps")
    steps = _need_int(values, "steps")
    if steps < 0:
        raise ConfigError("steps must be nonnegative, got %d" % steps)
    try:
        step_params = StepParams(
            T=_need_float(values, "step.T", 1.0), X=_need_float(values, "step.X", 1.0)
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    initial = _build_initial(values)
    w = _need_float(values, "analytic.w", 0.0)
    grid_spacing = _need_float(values, "analytic.grid_spacing", 0.5)
    if not (grid_spacing > 0.0):
        raise ConfigError("analytic.grid_spacing must be positive")
    kmax = _need_int(values, "trajectory.kmax", 25)
    if kmax < 1:
        raise ConfigError("trajectory.kmax must be at least 1")
    out_dir = values.get("out.dir", "out")
    fmt_raw = values.get("out.formats", "csv,json")
    formats = tuple(tok for tok in (t.strip().lower() for t in fmt_raw.split(",")) if tok)
    if not formats:
        raise ConfigError("out.formats must name at least one format")
    for fmt in formats:
        if fmt not in _FORMATS:
            raise ConfigError("unknown output format %r (choose from csv,json,pgm)" % fmt)
    return RunConfig(
        schedule=schedule,
        steps=steps,
        step_params=step_params,
        initial=initial,
        w=w,
        grid_spacing=grid_spacing,
        kmax=kmax,
        out_dir=out_dir,
        formats=formats,
    )

"""Time-dependent coin phases and the phase-cosine integral.

A phase schedule maps step indices (or continuous dimensionless time) to a
coin angle theta.  Everything downstream consumes one of three things from
this module: the per-step angle ``phase_at``, the 2x2 coin ``coin_matrix``,
or the displacement integral ``velocity_integral``
I(tau) = integral of cos theta(t) dt over [0, tau], which sets the
wavefront positions +-I(tau).
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ScheduleExhaustedError
from .specfun import integrate_adaptive

__all__ = [
    "ScheduleKind",
    "PhaseSchedule",
    "StepParams",
    "phase_at",
    "coin_matrix",
    "velocity_integral",
]

# Below this |omega| the linear closed form degenerates to tau*cos(theta0).
OMEGA_DEGENERATE = 1e-12


class ScheduleKind(enum.Enum):
    CONSTANT = "constant"
    LINEAR = "linear"
    SINUSOIDAL = "sinusoidal"
    TABULATED = "tabulated"


@dataclass(frozen=True)
class PhaseSchedule:
    """Coin-angle schedule.

    kind selects the rule:
      constant    theta(t) = theta0
      linear      theta(t) = theta0 + omega*t
      sinusoidal  theta(t) = theta0 * sin(omega*t)   (theta0 is an amplitude)
      tabulated   theta_n = table[n], one entry per step
    Phases are never range-reduced; angles may exceed 2*pi.
    """

    kind: ScheduleKind
    theta0: float = 0.0
    omega: float = 0.0
    table: tuple = field(default=None)

    def __post_init__(self):
        if not isinstance(self.kind, ScheduleKind):
            raise ValueError("kind must be a ScheduleKind")
        if not (math.isfinite(self.theta0) and math.isfinite(self.omega)):
            raise ValueError("theta0 and omega must be finite")
        if self.kind is ScheduleKind.TABULATED:
            if self.table is None or len(self.table) == 0:
                raise ValueError("tabulated schedule requires a non-empty table")
            tab = tuple(float(v) for v in self.table)
            if not all(math.isfinite(v) for v in tab):
                raise ValueError("tabulated schedule entries must be finite")
            object.__setattr__(self, "table", tab)
        elif self.table is not None:
            raise ValueError("table is only valid for tabulated schedules")

    @staticmethod
    def constant(theta0):
        return PhaseSchedule(ScheduleKind.CONSTANT, theta0=float(theta0))

    @staticmethod
    def linear(theta0, omega):
        return PhaseSchedule(ScheduleKind.LINEAR, theta0=float(theta0), omega=float(omega))

    @staticmethod
    def sinusoidal(theta0, omega):
        return PhaseSchedule(ScheduleKind.SINUSOIDAL, theta0=float(theta0), omega=float(omega))

    @staticmethod
    def tabulated(table):
        return PhaseSchedule(ScheduleKind.TABULATED, table=tuple(table))


@dataclass(frozen=True)
class StepParams:
    """Physical step scales: T time units per step, X length units per site."""

    T: float = 1.0
    X: float = 1.0

    def __post_init__(self):
        if not (self.T > 0.0 and math.isfinite(self.T)):
            raise ValueError("T must be positive and finite")
        if not (self.X > 0.0 and math.isfinite(self.X)):
            raise ValueError("X must be positive and finite")


def phase_at(schedule, n, T=1.0):
    """Coin angle theta_n = theta(n*T) applied on the n -> n+1 transition.

    The step index starts at 0.  Tabulated schedules raise
    ScheduleExhaustedError once the table runs out.
    """
    n = int(n)
    if n < 0:
        raise ValueError("step index must be nonnegative")
    k = schedule.kind
    if k is ScheduleKind.CONSTANT:
        return schedule.theta0
    if k is ScheduleKind.LINEAR:
        return schedule.theta0 + schedule.omega * n * T
    if k is ScheduleKind.SINUSOIDAL:
        return schedule.theta0 * math.sin(schedule.omega * n * T)
    if n >= len(schedule.table):
        raise ScheduleExhaustedError(
            "schedule table has %d entries; step %d requested" % (len(schedule.table), n)
        )
    return schedule.table[n]


def coin_matrix(theta):
    """2x2 coin [[cos t, sin t], [sin t, -cos t]]: symmetric, orthogonal, det -1."""
    t = float(theta)
    if not math.isfinite(t):
        raise ValueError("theta must be finite")
    c = math.cos(t)
    s = math.sin(t)
    return np.array([[c, s], [s, -c]], dtype=np.float64)


def _tabulated_integral(schedule, tau):
    # Piecewise-constant phase: exact sum, one term per whole step plus the
    # fractional remainder.
    n_full = int(math.floor(tau))
    frac = tau - n_full
    table = schedule.table
    if n_full > len(table) or (n_full == len(table) and frac > 0.0):
        raise ScheduleExhaustedError(
            "schedule table covers tau <= %d; tau = %.17g requested" % (len(table), tau)
        )
    total = 0.0
    for j in range(n_full):
        total += math.cos(table[j])
    if frac > 0.0:
        total += frac * math.cos(table[n_full])
    return total


def velocity_integral(schedule, tau):
    """I(tau) = integral of cos(theta(t)) dt from 0 to tau.

    Closed forms are used where they exist (constant, linear including the
    omega -> 0 limit, tabulated); the sinusoidal kind falls back to
    adaptive quadrature.  Always |I(tau)| <= tau.
    """
    tau = float(tau)
    if not math.isfinite(tau):
        raise ValueError("tau must be finite")
    if tau < 0.0:
        raise ValueError("tau must be nonnegative")
    if tau == 0.0:
        return 0.0
    k = schedule.kind
    if k is ScheduleKind.CONSTANT:
        return tau * math.cos(schedule.theta0)
    if k is ScheduleKind.LINEAR:
        w = schedule.omega
        if abs(w) < OMEGA_DEGENERATE:
            return tau * math.cos(schedule.theta0)
        return (math.sin(schedule.theta0 + w * tau) - math.sin(schedule.theta0)) / w
    if k is ScheduleKind.SINUSOIDAL:
        a = schedule.theta0
        w = schedule.omega
        return integrate_adaptive(lambda t: np.cos(a * np.sin(w * t)), 0.0, tau, tol=1e-12)
    return _tabulated_integral(schedule, tau)

"""Closed-form walker trajectories, chain taxonomy, and peak comparison.

The two wavefront branches travel at +-I(tau) where I is the phase-cosine
integral, so every trajectory here is an antisymmetric pair
x_plus(tau) = +I(tau), x_minus(tau) = -I(tau).  The x_plus branch carries
the right-moving component of the initial state.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ScheduleExhaustedError  # noqa: F401  (re-raised through velocity_integral)
from .schedules import OMEGA_DEGENERATE, velocity_integral
from .simulator import peak_trails
from .specfun import bessel_j

__all__ = [
    "Trajectory",
    "ChainClass",
    "ComparisonReport",
    "trajectory_linear",
    "trajectory_sinusoidal",
    "trajectory_from_schedule",
    "classify_chain",
    "compare_peaks",
]

# Branch gap below which the two wavefronts are considered to cross.
CROSSING_GAP = 1.0

_CLASS_EPS = 1e-9


class ChainClass(enum.Enum):
    """Taxonomy of linear-schedule trajectory chains."""

    LOOP_LINE = "loop-line"
    CROSSING_LOOP_LOOP = "crossing-loop-loop"
    TOUCHING_LOOP_LOOP = "touching-loop-loop"

    @property
    def label(self):
        return self.value


@dataclass(frozen=True)
class Trajectory:
    """Sampled branch positions: x_plus = +I(tau), x_minus = -I(tau)."""

    taus: np.ndarray
    x_plus: np.ndarray
    x_minus: np.ndarray

    def __post_init__(self):
        if not (len(self.taus) == len(self.x_plus) == len(self.x_minus)):
            raise ValueError("taus, x_plus, x_minus must have equal lengths")

    def __len__(self):
        return len(self.taus)


def _as_tau_array(tau):
    arr = np.asarray(tau, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError("tau must be finite")
    if np.any(arr < 0.0):
        raise ValueError("tau must be nonnegative")
    return arr


def trajectory_linear(theta0, omega, tau):
    """Branch positions for theta(t) = theta0 + omega*t.

    Returns (x_plus, x_minus) matching the shape of tau.  The omega -> 0
    limit reduces to straight lines +-tau*cos(theta0).
    """
    arr = _as_tau_array(tau)
    if abs(omega) < OMEGA_DEGENERATE:
        xp = arr * math.cos(theta0)
    else:
        xp = (np.sin(theta0 + omega * arr) - math.sin(theta0)) / omega
    xm = -xp
    if np.ndim(tau) == 0:
        return float(xp), float(xm)
    return xp, xm


def trajectory_sinusoidal(theta0, omega, tau, k_max=25):
    """Branch positions for theta(t) = theta0*sin(omega*t).

    Term-by-term integration of the harmonic expansion of cos(theta(t))
    gives

        I(tau) = J_0(theta0)*tau
               + sum_k (2/(2k*omega)) * J_2k(theta0) * sin(2k*omega*tau)

    truncated at k_max, with early termination once the coefficient
    magnitude drops below 1e-12.  theta0 = 0 (or omega -> 0) is ballistic.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    arr = _as_tau_array(tau)
    if abs(omega) < OMEGA_DEGENERATE:
        xp = arr.copy()
    else:
        xp = bessel_j(0, theta0) * arr
        for k in range(1, int(k_max) + 1):
            coeff = bessel_j(2 * k, theta0)
            if abs(coeff) / (2 * k * abs(omega)) < 1e-12:
                break
            xp = xp + (2.0 / (2 * k * omega)) * coeff * np.sin(2 * k * omega * arr)
    xm = -xp
    if np.ndim(tau) == 0:
        return float(xp), float(xm)
    return xp, xm


def trajectory_from_schedule(schedule, taus):
    """Trajectory sampled via the velocity integral; works for any schedule."""
    arr = _as_tau_array(taus)
    xp = np.array([velocity_integral(schedule, t) for t in arr.ravel()])
    xp = xp.reshape(arr.shape)
    return Trajectory(taus=arr, x_plus=xp, x_minus=-xp)


def classify_chain(theta0, omega):
    """Chain class of a linear schedule from exact trigonometric predicates.

    The bias of the trajectory is -sin(theta0)/omega and the oscillation
    amplitude is 1/|omega|; zero bias gives crossing loops, |bias| equal
    to the amplitude gives touching loops, anything else is a loop-line.
    """
    if not (math.isfinite(theta0) and math.isfinite(omega)):
        raise ValueError("theta0 and omega must be finite")
    if omega == 0.0:
        raise ValueError("chain taxonomy is undefined for omega = 0 (straight-line trajectory)")
    if abs(math.sin(theta0)) < _CLASS_EPS:
        return ChainClass.CROSSING_LOOP_LOOP
    if abs(math.cos(theta0)) < _CLASS_EPS:
        return ChainClass.TOUCHING_LOOP_LOOP
    return ChainClass.LOOP_LINE


@dataclass(frozen=True)
class ComparisonReport:
    """Per-step distances between numerical peaks and trajectory branches.

    offsets[i] holds one entry per matched peak at steps[i] (up to two).
    Crossings are steps where the branch gap |x_plus - x_minus| is at most
    one lattice unit; crossing_peaks records the strongest peak there.
    """

    steps: tuple
    offsets: tuple
    max_offset: float
    mean_offset: float
    crossings: tuple
    crossing_peaks: tuple

    def to_dict(self):
        return {
            "steps": list(self.steps),
            "offsets": [list(o) for o in self.offsets],
            "max_offset": self.max_offset,
            "mean_offset": self.mean_offset,
            "crossings": list(self.crossings),
            "crossing_peaks": list(self.crossing_peaks),
        }


def compare_peaks(record, trajectory):
    """Match top-2 numerical peaks to the nearer branch at every step.

    The record's steps must all be present in the trajectory samples.
    Raises ValueError on an empty record or missing coverage.
    """
    if len(record.steps) == 0:
        raise ValueError("record is empty")
    lookup = {}
    for i, t in enumerate(np.asarray(trajectory.taus, dtype=np.float64)):
        lookup[float(t)] = (float(trajectory.x_plus[i]), float(trajectory.x_minus[i]))
    trails = peak_trails(record, 2)
    steps = []
    offsets = []
    crossings = []
    crossing_peaks = []
    all_offsets = []
    for i, n in enumerate(record.steps):
        key = float(n)
        if key not in lookup:
            raise ValueError("trajectory does not cover step %d" % int(n))
        xp, xm = lookup[key]
        row_offsets = tuple(min(abs(m - xp), abs(m - xm)) for m in trails[i])
        steps.append(int(n))
        offsets.append(row_offsets)
        all_offsets.extend(row_offsets)
        if abs(xp - xm) <= CROSSING_GAP:
            crossings.append(int(n))
            crossing_peaks.append(trails[i][0] if trails[i] else 0)
    return ComparisonReport(
        steps=tuple(steps),
        offsets=tuple(offsets),
        max_offset=max(all_offsets) if all_offsets else 0.0,
        mean_offset=(sum(all_offsets) / len(all_offsets)) if all_offsets else 0.0,
        crossings=tuple(crossings),
        crossing_peaks=tuple(crossing_peaks),
    )

"""Exact amplitude evolution of the driven-coin walk.

The update applied on the n -> n+1 transition, with c = cos(theta_n) and
s = sin(theta_n):

    R[m, n+1] = c * R[m-1, n] + s * L[m-1, n]
    L[m, n+1] = s * R[m+1, n] - c * L[m+1, n]

Amplitudes live on a dense preallocated lattice [-N, N]; sites outside the
light cone and parity-forbidden sites stay exactly zero.  No renormalization
is ever applied: norm drift is a bug, not something to hide.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .schedules import PhaseSchedule, StepParams, phase_at

__all__ = [
    "Spinor",
    "WalkState",
    "WalkConfig",
    "SpacetimeRecord",
    "initialize",
    "step",
    "evolve",
    "iter_states",
    "probabilities",
    "peak_trails",
]

NORM_TOL = 1e-12


@dataclass(frozen=True)
class Spinor:
    """Single-site coin state with right and left amplitudes."""

    r: complex = 0.0
    l: complex = 0.0

    def norm_sq(self):
        return abs(self.r) ** 2 + abs(self.l) ** 2


def default_initial():
    """Balanced superposition (|R> + i|L>)/sqrt(2) at the origin."""
    rt = 1.0 / math.sqrt(2.0)
    return Spinor(r=rt, l=1j * rt)


@dataclass(frozen=True)
class WalkConfig:
    """Run description: step count, coin schedule, scales, initial state.

    initial may be None (balanced default at the origin), a single Spinor
    placed at the origin, or a mapping {site: Spinor}.
    """

    steps: int
    schedule: PhaseSchedule
    step_params: StepParams = field(default_factory=StepParams)
    initial: object = None

    def __post_init__(self):
        if int(self.steps) != self.steps or self.steps < 0:
            raise ValueError("steps must be a nonnegative integer")
        object.__setattr__(self, "steps", int(self.steps))

    def initial_map(self):
        init = self.initial
        if init is None:
            init = default_initial()
        if isinstance(init, Spinor):
            return {0: init}
        return {int(m): sp for m, sp in init.items()}


@dataclass
class WalkState:
    """Amplitudes at one step on the preallocated lattice [-n_max, n_max]."""

    n: int
    n_max: int
    r: np.ndarray
    l: np.ndarray

    @property
    def sites(self):
        return np.arange(-self.n_max, self.n_max + 1)

    def spinor(self, m):
        i = m + self.n_max
        if i < 0 or i >= 2 * self.n_max + 1:
            return Spinor(0.0, 0.0)
        return Spinor(complex(self.r[i]), complex(self.l[i]))

    def norm_sq(self):
        return float(np.sum(np.abs(self.r) ** 2 + np.abs(self.l) ** 2))


@dataclass(frozen=True)
class SpacetimeRecord:
    """Probability history: rows indexed by step, columns by site."""

    steps: np.ndarray
    sites: np.ndarray
    P: np.ndarray
    PR: np.ndarray
    PL: np.ndarray

    def row(self, n):
        i = int(np.searchsorted(self.steps, n))
        if i >= len(self.steps) or self.steps[i] != n:
            raise KeyError("step %r not in record" % (n,))
        return self.P[i]


def initialize(config):
    """State at n = 0 with the configured amplitudes in place.

    Raises ValueError if the initial state is not unit-norm within 1e-12;
    the state is never silently renormalized.
    """
    n_max = config.steps
    size = 2 * n_max + 1
    r = np.zeros(size, dtype=np.complex128)
    l = np.zeros(size, dtype=np.complex128)
    total = 0.0
    for m, sp in config.initial_map().items():
        if abs(m) > n_max:
            raise ValueError("initial site %d outside lattice [-%d, %d]" % (m, n_max, n_max))
        r[m + n_max] = sp.r
        l[m + n_max] = sp.l
        total += sp.norm_sq()
    if abs(total - 1.0) > NORM_TOL:
        raise ValueError("initial state norm %.17g is not 1 within %g" % (total, NORM_TOL))
    return WalkState(n=0, n_max=n_max, r=r, l=l)


def step(state, theta_n):
    """One coin-and-shift update; returns a new state at n + 1."""
    c = math.cos(theta_n)
    s = math.sin(theta_n)
    r = state.r
    l = state.l
    nr = np.zeros_like(r)
    nl = np.zeros_like(l)
    nr[1:] = c * r[:-1] + s * l[:-1]
    nl[:-1] = s * r[1:] - c * l[1:]
    return WalkState(n=state.n + 1, n_max=state.n_max, r=nr, l=nl)


def iter_states(config):
    """Yield the walk state at every step 0..N without retaining history.

    This is the streaming interface: sweeps and seed extraction consume a
    few early states and drop the rest.
    """
    state = initialize(config)
    yield state
    T = config.step_params.T
    for n in range(config.steps):
        theta = phase_at(config.schedule, n, T)
        state = step(state, theta)
        yield state


def probabilities(state):
    """(P, P_R, P_L) arrays over the lattice; P = P_R + P_L."""
    pr = np.abs(state.r) ** 2
    pl = np.abs(state.l) ** 2
    return pr + pl, pr, pl


def evolve(config):
    """Run the walk and record (P, P_R, P_L) for every step 0..N."""
    n_max = config.steps
    size = 2 * n_max + 1
    P = np.zeros((n_max + 1, size))
    PR = np.zeros_like(P)
    PL = np.zeros_like(P)
    for state in iter_states(config):
        p, pr, pl = probabilities(state)
        P[state.n] = p
        PR[state.n] = pr
        PL[state.n] = pl
    return SpacetimeRecord(
        steps=np.arange(n_max + 1),
        sites=np.arange(-n_max, n_max + 1),
        P=P,
        PR=PR,
        PL=PL,
    )


def _row_peaks(sites, row, k):
    # Structural parity zeros would make every occupied site look like a
    # peak, so maxima are taken along the subsequence of occupied sites.
    occ = np.flatnonzero(row > 0.0)
    if len(occ) == 0:
        return []
    vals = row[occ]
    peaks = []
    for j in range(len(occ)):
        left_ok = j == 0 or vals[j] > vals[j - 1]
        right_ok = j == len(occ) - 1 or vals[j] > vals[j + 1]
        if left_ok and right_ok:
            m = int(sites[occ[j]])
            peaks.append((-vals[j], abs(m), m))
    peaks.sort()
    return [m for _, _, m in peaks[:k]]


def peak_trails(record, k):
    """Top-k strict local-maximum positions of P for each recorded step.

    Ties are broken toward smaller |m|, then toward negative m.  Rows with
    fewer maxima than k return what exists.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return [_row_peaks(record.sites, record.P[i], k) for i in range(len(record.steps))]

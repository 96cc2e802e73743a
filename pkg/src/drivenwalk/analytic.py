"""Long-wavelength analytic solution of the driven walk.

The continuum field is a superposition of Airy-carrier kernels launched
from the walk's first two steps.  With I(tau) the phase-cosine integral
and b = +-1 the branch sign (b = +1 rides with the right-moving front),

    Z_b(xi, tau) = |2/I|^(1/3) * exp(chi_b) * Ai(zeta_b)
    zeta_b = |2/I|^(1/3) * (b*xi - I + 2 w^4 / I)
    chi_b  = (2 w^2 / I) * (b*xi - I + 4 w^4 / (3 I))

and the per-component amplitudes are

    A_b(xi, tau) = 1/2 * sum_m (A[m, 0] + b * A[m, 1]) * Z_b(xi - m, tau)

with the step-0/step-1 amplitudes A[m, 0], A[m, 1] taken from the exact
simulator.  Probabilities combine the branches with a step-parity sign:
P = |A_plus + (-1)^n A_minus|^2 per component.

The kernel prefactor diverges where I(tau) = 0; such times are singular.
``z_kernel`` raises SingularTimeError there, while ``analytic_distribution``
marks whole rows absent instead of failing the grid.

This model intentionally reproduces only the wavefront structure; the
residual linear spreading of the exact walk is outside its reach.
"""

import math
import numbers
from dataclasses import dataclass, field

import numpy as np

from .errors import SingularTimeError
from .schedules import phase_at, velocity_integral
from .simulator import initialize, step
from .specfun import airy_ai

__all__ = [
    "SINGULAR_I",
    "SeedAmplitudes",
    "AnalyticParams",
    "AnalyticField",
    "z_kernel",
    "seed_from_simulation",
    "analytic_amplitude",
    "analytic_distribution",
    "default_grid",
    "make_params",
]

# |I| below this is treated as a kernel singularity.
SINGULAR_I = 1e-9

_STATES = ("R", "L")


def _branch_sign(branch):
    if branch in (1, +1) or branch == "+":
        return 1.0
    if branch in (-1,) or branch == "-":
        return -1.0
    raise ValueError("branch must be +1/-1 (or '+'/'-')")


def _kernel_given_velocity(xi, ivalue, bsign, w):
    alpha = abs(2.0 / ivalue) ** (1.0 / 3.0)
    carrier = bsign * xi - ivalue
    if w == 0.0:
        return alpha * airy_ai(alpha * carrier)
    w2 = w * w
    zeta = alpha * (carrier + 2.0 * w2 * w2 / ivalue)
    chi = (2.0 * w2 / ivalue) * (carrier + 4.0 * w2 * w2 / (3.0 * ivalue))
    return alpha * np.exp(chi) * airy_ai(zeta)


def z_kernel(xi, tau, branch, schedule, w=0.0):
    """Airy carrier kernel Z_b(xi, tau) for one branch.

    Raises SingularTimeError when |I(tau)| < SINGULAR_I, where the
    |2/I|^(1/3) prefactor blows up.
    """
    tau = float(tau)
    if tau <= 0.0:
        raise SingularTimeError("kernel undefined at tau = %.17g (needs tau > 0)" % tau)
    ivalue = velocity_integral(schedule, tau)
    if abs(ivalue) < SINGULAR_I:
        raise SingularTimeError(
            "velocity integral %.3g at tau = %.17g is below %g; kernel is singular"
            % (ivalue, tau, SINGULAR_I)
        )
    bsign = _branch_sign(branch)
    arr = np.asarray(xi, dtype=np.float64)
    out = _kernel_given_velocity(arr, ivalue, bsign, float(w))
    if np.ndim(xi) == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class SeedAmplitudes:
    """Sparse step-0 and step-1 amplitudes per component.

    a0 and a1 map component name ("R" or "L") to {site: complex amplitude};
    only nonzero entries are stored.
    """

    a0: dict
    a1: dict

    def for_state(self, state):
        if state not in _STATES:
            raise ValueError("state must be 'R' or 'L'")
        return self.a0.get(state, {}), self.a1.get(state, {})

    def step0_norm_sq(self):
        total = 0.0
        for comp in _STATES:
            for amp in self.a0.get(comp, {}).values():
                total += abs(amp) ** 2
        return total


def seed_from_simulation(config):
    """Extract A[m, 0] and A[m, 1] by running the exact walk for one step."""
    state0 = initialize(config)
    theta0 = phase_at(config.schedule, 0, config.step_params.T)
    state1 = step(state0, theta0)

    def sparse(vec, n_max):
        out = {}
        for i in np.flatnonzero(vec):
            out[int(i) - n_max] = complex(vec[i])
        return out

    a0 = {"R": sparse(state0.r, state0.n_max), "L": sparse(state0.l, state0.n_max)}
    a1 = {"R": sparse(state1.r, state1.n_max), "L": sparse(state1.l, state1.n_max)}
    return SeedAmplitudes(a0=a0, a1=a1)


@dataclass(frozen=True)
class AnalyticParams:
    """Field evaluation parameters.

    grid is the strictly increasing xi sample vector, times the tau sample
    vector, seed_amplitudes the sparse step-0/1 data.  w is the expansion
    width parameter in the kernel; 0 keeps the carrier purely Airy.
    """

    grid: np.ndarray
    times: np.ndarray
    seed_amplitudes: SeedAmplitudes
    w: float = 0.0

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=np.float64)
        times = np.asarray(self.times, dtype=np.float64)
        if grid.ndim != 1 or len(grid) == 0 or not np.all(np.diff(grid) > 0.0):
            raise ValueError("grid must be a non-empty strictly increasing vector")
        if times.ndim != 1 or not np.all(np.isfinite(times)) or np.any(times < 0.0):
            raise ValueError("times must be finite and nonnegative")
        if not math.isfinite(self.w):
            raise ValueError("w must be finite")
        norm = self.seed_amplitudes.step0_norm_sq()
        if abs(norm - 1.0) > 1e-12:
            raise ValueError("seed step-0 norm %.17g is not 1 within 1e-12" % norm)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "times", times)


@dataclass(frozen=True)
class AnalyticField:
    """Evaluated field on times x grid.

    Rows at singular times are flagged in ``absent`` and filled with NaN.
    amp maps (component, branch sign) to the raw branch amplitudes.
    """

    times: np.ndarray
    grid: np.ndarray
    P: np.ndarray
    PR: np.ndarray
    PL: np.ndarray
    amp: dict
    absent: np.ndarray


def _branch_amplitude(xi, ivalue, bsign, w, seeds0, seeds1):
    total = np.zeros(np.shape(xi), dtype=np.complex128)
    sites = set(seeds0) | set(seeds1)
    for m in sites:
        weight = seeds0.get(m, 0.0) + bsign * seeds1.get(m, 0.0)
        if weight == 0.0:
            continue
        total = total + (0.5 * weight) * _kernel_given_velocity(xi - m, ivalue, bsign, w)
    return total


def analytic_amplitude(xi, tau, state, params, schedule):
    """Branch amplitude pair (A_plus, A_minus) for one component at tau."""
    tau = float(tau)
    if tau <= 0.0:
        raise SingularTimeError("kernel undefined at tau = %.17g (needs tau > 0)" % tau)
    ivalue = velocity_integral(schedule, tau)
    if abs(ivalue) < SINGULAR_I:
        raise SingularTimeError(
            "velocity integral %.3g at tau = %.17g is below %g; kernel is singular"
            % (ivalue, tau, SINGULAR_I)
        )
    seeds0, seeds1 = params.seed_amplitudes.for_state(state)
    arr = np.asarray(xi, dtype=np.float64)
    a_plus = _branch_amplitude(arr, ivalue, +1.0, params.w, seeds0, seeds1)
    a_minus = _branch_amplitude(arr, ivalue, -1.0, params.w, seeds0, seeds1)
    if np.ndim(xi) == 0:
        return complex(a_plus), complex(a_minus)
    return a_plus, a_minus


def analytic_distribution(params, schedule, n_parity_source=None):
    """Evaluate P, P_R, P_L on the configured times x grid.

    The branch-combination parity uses n = round(tau) per row, or the
    fixed step index n_parity_source when given.  Singular times produce
    absent rows instead of raising.
    """
    grid = params.grid
    times = params.times
    shape = (len(times), len(grid))
    P = np.full(shape, np.nan)
    PR = np.full(shape, np.nan)
    PL = np.full(shape, np.nan)
    amp = {(comp, bs): np.full(shape, np.nan, dtype=np.complex128) for comp in _STATES for bs in (1, -1)}
    absent = np.zeros(len(times), dtype=bool)
    if n_parity_source is not None and not isinstance(n_parity_source, numbers.Integral):
        raise ValueError("n_parity_source must be an integer step index")
    for i, tau in enumerate(times):
        if tau <= 0.0:
            absent[i] = True
            continue
        ivalue = velocity_integral(schedule, float(tau))
        if abs(ivalue) < SINGULAR_I:
            absent[i] = True
            continue
        n = int(n_parity_source) if n_parity_source is not None else int(round(float(tau)))
        parity = 1.0 if n % 2 == 0 else -1.0
        comps = {}
        for comp in _STATES:
            seeds0, seeds1 = params.seed_amplitudes.for_state(comp)
            a_plus = _branch_amplitude(grid, ivalue, +1.0, params.w, seeds0, seeds1)
            a_minus = _branch_amplitude(grid, ivalue, -1.0, params.w, seeds0, seeds1)
            amp[(comp, 1)][i] = a_plus
            amp[(comp, -1)][i] = a_minus
            comps[comp] = np.abs(a_plus + parity * a_minus) ** 2
        PR[i] = comps["R"]
        PL[i] = comps["L"]
        P[i] = PR[i] + PL[i]
    return AnalyticField(times=times, grid=grid, P=P, PR=PR, PL=PL, amp=amp, absent=absent)


def default_grid(n_max, spacing=0.5):
    """Strictly increasing xi grid covering [-(N+5), N+5]."""
    if spacing <= 0.0:
        raise ValueError("spacing must be positive")
    half = n_max + 5
    count = int(round(2 * half / spacing)) + 1
    return np.linspace(-half, half, count)


def make_params(config, times=None, w=0.0, grid_spacing=0.5):
    """AnalyticParams matching a walk config: seeds, grid, integer times."""
    seeds = seed_from_simulation(config)
    grid = default_grid(config.steps, grid_spacing)
    if times is None:
        times = np.arange(config.steps + 1, dtype=np.float64)
    return AnalyticParams(grid=grid, times=np.asarray(times, dtype=np.float64), seed_amplitudes=seeds, w=w)

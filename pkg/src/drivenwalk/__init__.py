"""Discrete-time walk on a line with a time-driven coin.

The package simulates the exact walk, evaluates its long-wavelength
analytic wavefront field built from Airy kernels, computes closed-form
branch trajectories with their chain taxonomy, and ships a deterministic
CLI for exporting all of it.
"""

from .analytic import (
    AnalyticField,
    AnalyticParams,
    SeedAmplitudes,
    analytic_amplitude,
    analytic_distribution,
    default_grid,
    make_params,
    seed_from_simulation,
    z_kernel,
)
from .config import RunConfig, build_run_config, parse_angle, parse_config_file
from .errors import (
    AccuracyError,
    ConfigError,
    DrivenWalkError,
    ScheduleExhaustedError,
    SingularTimeError,
)
from .schedules import (
    PhaseSchedule,
    ScheduleKind,
    StepParams,
    coin_matrix,
    phase_at,
    velocity_integral,
)
from .simulator import (
    SpacetimeRecord,
    Spinor,
    WalkConfig,
    WalkState,
    default_initial,
    evolve,
    initialize,
    iter_states,
    peak_trails,
    probabilities,
    step,
)
from .specfun import SpecialFunctionConfig, airy_ai, bessel_j, integrate_adaptive
from .trajectory import (
    ChainClass,
    ComparisonReport,
    Trajectory,
    classify_chain,
    compare_peaks,
    trajectory_from_schedule,
    trajectory_linear,
    trajectory_sinusoidal,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AccuracyError",
    "AnalyticField",
    "AnalyticParams",
    "ChainClass",
    "ComparisonReport",
    "ConfigError",
    "DrivenWalkError",
    "PhaseSchedule",
    "RunConfig",
    "ScheduleExhaustedError",
    "ScheduleKind",
    "SeedAmplitudes",
    "SingularTimeError",
    "SpacetimeRecord",
    "SpecialFunctionConfig",
    "Spinor",
    "StepParams",
    "Trajectory",
    "WalkConfig",
    "WalkState",
    "airy_ai",
    "analytic_amplitude",
    "analytic_distribution",
    "bessel_j",
    "build_run_config",
    "classify_chain",
    "coin_matrix",
    "compare_peaks",
    "default_grid",
    "default_initial",
    "evolve",
    "initialize",
    "integrate_adaptive",
    "iter_states",
    "make_params",
    "parse_angle",
    "parse_config_file",
    "peak_trails",
    "phase_at",
    "probabilities",
    "seed_from_simulation",
    "step",
    "trajectory_from_schedule",
    "trajectory_linear",
    "trajectory_sinusoidal",
    "velocity_integral",
    "z_kernel",
]

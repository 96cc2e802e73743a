"""
Airy wavefronts against the exact walk
======================================

The long-time probability profile is carried by two Airy-shaped fronts
riding at x = +-I(tau), seeded from the first simulated step.  This script
evaluates that analytic field for the crossing chain and lines its maxima
up against the exact simulation, including times just before and after the
fronts re-cross at tau = 60.
"""

import math
import os

import numpy as np

from drivenwalk import (
    PhaseSchedule,
    WalkConfig,
    analytic_distribution,
    evolve,
    make_params,
    velocity_integral,
)
from drivenwalk.matio import write_matrix_csv

OMEGA = math.pi / 60
OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "output")

schedule = PhaseSchedule.linear(0.0, OMEGA)
config = WalkConfig(steps=65, schedule=schedule)

record = evolve(config)
times = [20.0, 30.0, 45.0, 59.0, 60.0, 61.0]
params = make_params(config, times=times)
field = analytic_distribution(params, schedule)

print("tau   front (+I)   analytic argmax   walk argmax")
for i, tau in enumerate(times):
    if field.absent[i]:
        # the kernel degenerates when the front integral vanishes
        print("%4.0f  %10.3f   (singular: row absent)" % (tau, velocity_integral(schedule, tau)))
        continue
    xi_star = field.grid[np.argmax(field.P[i])]
    m_star = record.sites[np.argmax(record.P[int(tau)])]
    print(
        "%4.0f  %10.3f   %15.1f   %11d"
        % (tau, velocity_integral(schedule, tau), xi_star, m_star)
    )

os.makedirs(OUT, exist_ok=True)
write_matrix_csv(
    os.path.join(OUT, "analytic_P.csv"), field.grid, field.P, absent_rows=field.absent
)
write_matrix_csv(os.path.join(OUT, "walk_P.csv"), record.sites, record.P)
print("\nwrote %s/{analytic_P.csv,walk_P.csv}" % OUT)

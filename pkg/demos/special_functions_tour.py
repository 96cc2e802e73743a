"""
The numerical kernel: Airy, Bessel, quadrature
==============================================

The analytic wavefront machinery rests on three self-contained numerical
tools.  This script samples the Airy function across its oscillatory and
decaying ranges, locates Bessel zeros by bisection, and shows the adaptive
integrator reporting its own error bound.
"""

import math
import os

import numpy as np

from drivenwalk import airy_ai, bessel_j, integrate_adaptive
from drivenwalk.matio import write_matrix_csv

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "output")

# --- Airy function: oscillatory for x < 0, decaying for x > 0 ----------
xs = np.linspace(-15.0, 8.0, 461)
ys = airy_ai(xs)
i_max = int(np.argmax(ys))
print("Ai global maximum: %.6f at x = %.3f" % (ys[i_max], xs[i_max]))
print("Ai(0)  = %.15f" % airy_ai(0.0))
print("Ai(8)  = %.3e (deep in the decaying tail)" % airy_ai(8.0))

os.makedirs(OUT, exist_ok=True)
path = os.path.join(OUT, "airy_curve.csv")
write_matrix_csv(path, xs, ys.reshape(1, -1))
print("wrote", path)

# --- Bessel J_k: find the first zeros of J_0 by sign-change bisection ---
def j0_zero(lo, hi):
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if bessel_j(0, lo) * bessel_j(0, mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)

print("\nfirst three zeros of J_0:")
for lo, hi in ((2.0, 3.0), (5.0, 6.0), (8.0, 9.0)):
    print("  %.12f" % j0_zero(lo, hi))

# completeness of the Bessel coefficients at fixed argument
x = 7.0
total = bessel_j(0, x) ** 2 + 2.0 * sum(bessel_j(k, x) ** 2 for k in range(1, 60))
print("J_0^2 + 2 sum J_k^2 at x=7: %.15f" % total)

# --- adaptive quadrature: a sharp ridge needs local refinement ----------
ridge = lambda t: 1.0 / (1e-4 + (t - 0.3) ** 2)
value = integrate_adaptive(ridge, 0.0, 1.0, tol=1e-10)
exact = (math.atan(0.7 / 1e-2) - math.atan(-0.3 / 1e-2)) / 1e-2
print("\nridge integral: %.12f (exact %.12f, diff %.1e)" % (value, exact, abs(value - exact)))

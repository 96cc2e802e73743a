"""Independent evaluation routes used to validate the package.

Nothing here shares algorithms with the implementations under test:

* ``airy_oracle``: oscillatory-integral representation of Ai, split at the
  stationary point and then into half-period phase segments whose
  alternating partial sums are accelerated by iterated pairwise averaging.
* ``bessel_oracle``: integral representation of J_k on [0, pi].
* ``brute_force_amplitudes``: full matrix construction of the one-step
  unitary (shift times coin) applied to the state vector.
* ``constant_coin_reference``: dict-based walk with a fixed coin, written
  without numpy array stepping.
"""

import math

import numpy as np

from drivenwalk.specfun import integrate_adaptive


def _phase_inv(x, t_lo, target):
    # Smallest t > t_lo where t^3/3 + x t = target; the phase increases
    # monotonically past the stationary point, so bisection is safe.
    def phi(t):
        return t * t * t / 3.0 + x * t

    lo = t_lo
    hi = t_lo + 0.5
    while phi(hi) < target:
        hi += max(0.5, 0.5 * (hi - t_lo))
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if phi(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def airy_oracle(x, nseg=48, tol=1e-12):
    """Ai(x) from (1/pi) * integral of cos(t^3/3 + x t) over [0, inf)."""
    x = float(x)
    t0 = math.sqrt(max(0.0, -x))

    def f(t):
        return np.cos(t * t * t / 3.0 + x * t)

    phi0 = t0 * t0 * t0 / 3.0 + x * t0
    head = integrate_adaptive(f, 0.0, t0, tol=tol) if t0 > 0.0 else 0.0
    ts = [t0]
    for k in range(1, nseg + 1):
        ts.append(_phase_inv(x, ts[-1], phi0 + k * math.pi))
    partials = []
    acc = head
    for k in range(nseg):
        acc += integrate_adaptive(f, ts[k], ts[k + 1], tol=tol)
        partials.append(acc)
    s = np.array(partials)
    while len(s) > 1:
        s = 0.5 * (s[:-1] + s[1:])
    return float(s[0]) / math.pi


def bessel_oracle(k, x, tol=1e-13):
    """J_k(x) from (1/pi) * integral of cos(k t - x sin t) over [0, pi]."""

    def f(t):
        return np.cos(k * t - x * np.sin(t))

    return integrate_adaptive(f, 0.0, math.pi, tol=tol) / math.pi


def brute_force_amplitudes(thetas, initial_map, n_max):
    """All-step amplitudes from explicit one-step unitary matrices.

    Basis: index 2*(m + n_max) is R at site m, +1 is L at site m.
    Returns a list of state vectors, one per step 0..len(thetas).
    """
    size = 2 * (2 * n_max + 1)
    psi = np.zeros(size, dtype=np.complex128)
    for m, (r, l) in initial_map.items():
        psi[2 * (m + n_max)] = r
        psi[2 * (m + n_max) + 1] = l
    out = [psi.copy()]
    n_sites = 2 * n_max + 1
    for theta in thetas:
        c = math.cos(theta)
        s = math.sin(theta)
        coin = np.zeros((size, size), dtype=np.complex128)
        for i in range(n_sites):
            coin[2 * i, 2 * i] = c
            coin[2 * i, 2 * i + 1] = s
            coin[2 * i + 1, 2 * i] = s
            coin[2 * i + 1, 2 * i + 1] = -c
        shift = np.zeros((size, size), dtype=np.complex128)
        for i in range(n_sites):
            if i + 1 < n_sites:
                shift[2 * (i + 1), 2 * i] = 1.0
            if i - 1 >= 0:
                shift[2 * (i - 1) + 1, 2 * i + 1] = 1.0
        psi = shift @ (coin @ psi)
        out.append(psi.copy())
    return out


def constant_coin_reference(theta, steps, initial_map):
    """Dict-based fixed-coin walk; returns {site: (r, l)} at the last step."""
    c = math.cos(theta)
    s = math.sin(theta)
    r = {m: amp_r for m, (amp_r, _) in initial_map.items() if amp_r != 0}
    l = {m: amp_l for m, (_, amp_l) in initial_map.items() if amp_l != 0}
    for _ in range(steps):
        nr = {}
        nl = {}
        for m, amp in r.items():
            nr[m + 1] = nr.get(m + 1, 0.0) + c * amp
            nl[m - 1] = nl.get(m - 1, 0.0) + s * amp
        for m, amp in l.items():
            nr[m + 1] = nr.get(m + 1, 0.0) + s * amp
            nl[m - 1] = nl.get(m - 1, 0.0) - c * amp
        r = {m: v for m, v in nr.items() if v != 0.0}
        l = {m: v for m, v in nl.items() if v != 0.0}
    sites = set(r) | set(l)
    return {m: (r.get(m, 0.0), l.get(m, 0.0)) for m in sites}

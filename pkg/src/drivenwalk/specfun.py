"""Real-argument special functions and adaptive quadrature.

This module is self-contained on purpose: the rest of the package leans on
``airy_ai`` for continuum wavefront kernels, on ``bessel_j`` for drift
closed forms, and on ``integrate_adaptive`` both for production evaluation
of phase integrals and as the quadrature oracle in the test suite.

Evaluation strategy
-------------------
``airy_ai``
    Hybrid of three classical representations, selected per element:

    * Maclaurin series ``Ai(x) = Ai(0) f(x) + Ai'(0) g(x)`` on a central
      interval.  The two ascending series suffer catastrophic cancellation
      for moderately negative ``x``, so partial sums are accumulated in
      ``numpy.longdouble``; with 64-bit significands the worst-case
      cancellation near ``x = -7`` still leaves ~11 accurate digits.
    * Exponential asymptotic expansion for large positive ``x``.
    * Oscillatory asymptotic expansion (phase ``2/3 |x|^{3/2} - pi/4``)
      for large negative ``x``.

    Both asymptotic sums are divergent and are truncated at their smallest
    term per element (optimal truncation), never at a fixed order.  The
    handoff points include guard bands around the nominal switch radius:
    the positive series runs slightly past the switch and the negative
    series runs to at least 7, where the asymptotic error floor
    (~1e-13) is far below the accuracy targets.  A hard seam exactly at
    the nominal switch would leave ~1e-8 jumps on the oscillatory side.

``bessel_j``
    Ascending power series for small arguments; Miller's backward
    recurrence normalized by the Neumann sum ``J_0 + 2 sum J_{2k} = 1``
    for large ones.  Integer orders only.

``integrate_adaptive``
    Globally adaptive Gauss(7)/Kronrod(15) bisection with a worst-first
    interval heap.  Raises ``AccuracyError`` (carrying the best estimate
    and its bound) if the interval budget runs out.
"""

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError

__all__ = ["SpecialFunctionConfig", "airy_ai", "bessel_j", "integrate_adaptive"]


@dataclass
class SpecialFunctionConfig:
    """Tuning knobs for the evaluators.

    Attributes
    ----------
    target_abs_tolerance : float
        Default absolute tolerance for adaptive quadrature.
    series_max_terms : int
        Cap on ascending-series terms before giving up.
    asymptotic_switch_airy : float
        Nominal |x| beyond which ``airy_ai`` prefers asymptotics.  Guard
        bands (see module docstring) keep the actual seams in regions
        where both representations agree to ~1e-13.
    """

    target_abs_tolerance: float = 1e-10
    series_max_terms: int = 200
    asymptotic_switch_airy: float = 5.0

    def __post_init__(self):
        if not (self.target_abs_tolerance > 0.0):
            raise ValueError("target_abs_tolerance must be positive")
        if self.series_max_terms < 1:
            raise ValueError("series_max_terms must be at least 1")
        if not (self.asymptotic_switch_airy > 0.0):
            raise ValueError("asymptotic_switch_airy must be positive")


_DEFAULT_CONFIG = SpecialFunctionConfig()

# Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3).
_LD = np.longdouble
_AI0 = _LD("0.355028053887817239260063186004183176")
_AIP0 = _LD("-0.258819403792806798405183560189203963")

# Guard bands around the nominal switch radius (see module docstring).
_POS_GUARD = 0.5
_NEG_FLOOR = 7.0

# u_k coefficients of the Airy asymptotic expansions,
# u_0 = 1, u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)).
_NU = 40
_U = np.empty(_NU + 1, dtype=np.float64)
_U[0] = 1.0
for _k in range(1, _NU + 1):
    _U[_k] = _U[_k - 1] * (6 * _k - 5) * (6 * _k - 3) * (6 * _k - 1) / (216.0 * _k * (2 * _k - 1))
del _k


def _airy_series(x, max_terms):
    """Maclaurin series in longdouble; x is a float64 array."""
    xl = x.astype(_LD)
    x3 = xl * xl * xl
    f = np.ones_like(xl)
    g = xl.copy()
    tf = np.ones_like(xl)
    tg = xl.copy()
    eps = _LD("1e-25")
    for k in range(1, max_terms + 1):
        tf = tf * x3 / _LD((3 * k) * (3 * k - 1))
        tg = tg * x3 / _LD((3 * k + 1) * (3 * k))
        f = f + tf
        g = g + tg
        if max(np.max(np.abs(tf)), np.max(np.abs(tg))) < eps:
            break
    return (_AI0 * f + _AIP0 * g).astype(np.float64)


def _airy_asym_pos(x):
    """e^{-zeta} expansion for x > 0, optimally truncated per element."""
    zeta = (2.0 / 3.0) * np.power(x, 1.5)
    s = np.ones_like(x)
    term = np.ones_like(x)
    active = np.ones(x.shape, dtype=bool)
    for k in range(1, _NU + 1):
        new = term * (-(_U[k] / _U[k - 1]) / zeta)
        active &= np.abs(new) < np.abs(term)
        s = np.where(active, s + new, s)
        term = new
        if not active.any():
            break
    return np.exp(-zeta) / (2.0 * np.sqrt(np.pi) * np.power(x, 0.25)) * s


def _airy_asym_neg(x):
    """Oscillatory expansion for x < 0, optimally truncated per element."""
    z = -x
    zeta = (2.0 / 3.0) * np.power(z, 1.5)
    inv2 = 1.0 / (zeta * zeta)
    se = np.ones_like(z)
    te = np.ones_like(z)
    so = _U[1] / zeta
    to = so.copy()
    ae = np.ones(z.shape, dtype=bool)
    ao = np.ones(z.shape, dtype=bool)
    for k in range(1, _NU // 2):
        ne = te * (-(_U[2 * k] / _U[2 * k - 2])) * inv2
        ae &= np.abs(ne) < np.abs(te)
        se = np.where(ae, se + ne, se)
        te = ne
        no = to * (-(_U[2 * k + 1] / _U[2 * k - 1])) * inv2
        ao &= np.abs(no) < np.abs(to)
        so = np.where(ao, so + no, so)
        to = no
        if not (ae.any() or ao.any()):
            break
    phase = zeta - 0.25 * np.pi
    return (np.cos(phase) * se + np.sin(phase) * so) / (np.sqrt(np.pi) * np.power(z, 0.25))


def airy_ai(x, config=None):
    """Airy function Ai of a real argument.

    Parameters
    ----------
    x : float or array_like
        Real evaluation points.  Must be finite.
    config : SpecialFunctionConfig, optional
        Evaluation knobs; defaults preserve ~1e-13 absolute accuracy on
        [-15, 15] and graceful decay outside.

    Returns
    -------
    float or numpy.ndarray
        Ai(x), scalar for scalar input, float64 array otherwise.
    """
    cfg = config if config is not None else _DEFAULT_CONFIG
    arr = np.asarray(x, dtype=np.float64)
    scalar = arr.ndim == 0
    flat = np.atleast_1d(arr).ravel()
    if not np.all(np.isfinite(flat)):
        raise ValueError("airy_ai requires finite real input")
    hi = cfg.asymptotic_switch_airy + _POS_GUARD
    lo = -max(cfg.asymptotic_switch_airy, _NEG_FLOOR)
    out = np.empty_like(flat)
    mid = (flat >= lo) & (flat <= hi)
    pos = flat > hi
    neg = flat < lo
    if mid.any():
        out[mid] = _airy_series(flat[mid], cfg.series_max_terms)
    if pos.any():
        out[pos] = _airy_asym_pos(flat[pos])
    if neg.any():
        out[neg] = _airy_asym_neg(flat[neg])
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)


_BESSEL_SERIES_MAX_X = 12.0


def _bessel_series(k, x, max_terms):
    """Ascending series around 0; adequate up to |x| ~ 12."""
    hx = 0.5 * x
    t = 1.0
    for j in range(1, k + 1):
        t *= hx / j
    q = hx * hx
    s = t
    for j in range(1, max_terms + 1):
        t *= -q / (j * (k + j))
        s += t
        if abs(t) <= 1e-18 * abs(s) + 1e-300:
            break
    return s


def _bessel_miller(k, x):
    """Backward recurrence normalized by the Neumann sum identity."""
    top = max(k, int(x))
    m = top + 16 + int(math.ceil(math.sqrt(40.0 * top)))
    if m % 2 == 1:
        m += 1
    tox = 2.0 / x
    jp1 = 0.0
    j = 1e-30
    norm = 0.0
    target = 0.0
    for n in range(m, 0, -1):
        jm1 = n * tox * j - jp1
        jp1 = j
        j = jm1
        if abs(j) > 1e10:
            j *= 1e-10
            jp1 *= 1e-10
            norm *= 1e-10
            target *= 1e-10
        if n - 1 != 0 and (n - 1) % 2 == 0:
            norm += j
        if n - 1 == k:
            target = j
    norm = 2.0 * norm + j
    return target / norm


def bessel_j(k, x, config=None):
    """Bessel function J_k of integer order and real argument.

    Parameters
    ----------
    k : int
        Order, must be a nonnegative integer.
    x : float
        Real argument.  Negative arguments use J_k(-x) = (-1)^k J_k(x).
    config : SpecialFunctionConfig, optional
        Supplies the ascending-series term cap.

    Returns
    -------
    float
    """
    cfg = config if config is not None else _DEFAULT_CONFIG
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise ValueError("bessel_j order must be an integer")
    if k < 0:
        raise ValueError("bessel_j order must be nonnegative")
    xf = float(x)
    if not math.isfinite(xf):
        raise ValueError("bessel_j requires finite real input")
    sign = 1.0
    if xf < 0.0:
        xf = -xf
        if k % 2 == 1:
            sign = -1.0
    if xf == 0.0:
        return 1.0 if k == 0 else 0.0
    if xf <= _BESSEL_SERIES_MAX_X:
        return sign * _bessel_series(int(k), xf, cfg.series_max_terms)
    return sign * _bessel_miller(int(k), xf)


# Gauss(7)/Kronrod(15) nodes and weights on [-1, 1] (positive half).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KWEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
# Gauss nodes sit at the odd Kronrod positions.
_GIDX = np.arange(1, 15, 2)
_GWEIGHTS = np.concatenate([_WG[:-1], _WG[::-1]])


def _eval_batch(f, t):
    # Vectorized call first; scalar-only integrands (math.* based) raise
    # or return the wrong shape, and get evaluated point by point.
    try:
        out = np.asarray(f(t), dtype=np.float64)
        if out.shape != t.shape:
            raise TypeError
    except (TypeError, ValueError):
        out = np.array([float(f(v)) for v in t], dtype=np.float64)
    if not np.all(np.isfinite(out)):
        raise ValueError("integrand returned a non-finite value")
    return out


def _gk15(f, a, b):
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    y = _eval_batch(f, c + h * _NODES)
    k = h * float(np.dot(_KWEIGHTS, y))
    g = h * float(np.dot(_GWEIGHTS, y[_GIDX]))
    return k, abs(k - g)


def integrate_adaptive(f, a, b, tol=None, max_intervals=2048):
    """Definite integral of ``f`` on [a, b] to absolute tolerance ``tol``.

    Globally adaptive: the interval with the largest Gauss/Kronrod
    discrepancy is bisected until the summed error bound drops below
    ``tol`` or the interval budget is exhausted, in which case
    ``AccuracyError`` is raised carrying the best estimate.

    Parameters
    ----------
    f : callable
        Integrand; may be vectorized over numpy arrays or scalar-only.
    a, b : float
        Finite endpoints.  ``b < a`` integrates with flipped sign.
    tol : float, optional
        Absolute tolerance; defaults to the config target (1e-10).
    max_intervals : int
        Budget of subintervals.

    Returns
    -------
    float
    """
    if tol is None:
        tol = _DEFAULT_CONFIG.target_abs_tolerance
    af = float(a)
    bf = float(b)
    if not (math.isfinite(af) and math.isfinite(bf)):
        raise ValueError("integration endpoints must be finite")
    if not (tol > 0.0):
        raise ValueError("tolerance must be positive")
    if af == bf:
        return 0.0
    if bf < af:
        return -integrate_adaptive(f, bf, af, tol=tol, max_intervals=max_intervals)

    est, err = _gk15(f, af, bf)
    total = est
    total_err = err
    seq = 0
    heap = [(-err, seq, af, bf, est)]
    n_intervals = 1
    while total_err > tol and n_intervals < max_intervals:
        neg_err, _, ia, ib, iest = heapq.heappop(heap)
        mid = 0.5 * (ia + ib)
        le, lerr = _gk15(f, ia, mid)
        re, rerr = _gk15(f, mid, ib)
        total += (le + re) - iest
        total_err += (lerr + rerr) - (-neg_err)
        seq += 1
        heapq.heappush(heap, (-lerr, seq, ia, mid, le))
        seq += 1
        heapq.heappush(heap, (-rerr, seq, mid, ib, re))
        n_intervals += 1
    if total_err > tol:
        raise AccuracyError(
            "adaptive quadrature exhausted %d intervals; estimate %.17g with "
            "error bound %.3g exceeds tolerance %.3g"
            % (max_intervals, total, total_err, tol),
            estimate=total,
            error_bound=total_err,
        )
    return total

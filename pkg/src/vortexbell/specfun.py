"""Stable special-function evaluation: Laguerre, Hermite, log-factorials.

Polynomials are evaluated with three-term recurrences (never factorial
series), which stay accurate for the degrees this package needs. Scalar
inputs run on plain floats; array inputs broadcast through numpy.
"""

import math

import numpy as np

__all__ = [
    "MAX_DEGREE",
    "MAX_FACTORIAL_ARG",
    "laguerre",
    "laguerre_scaled",
    "hermite",
    "ln_factorial",
]

MAX_DEGREE = 64
MAX_FACTORIAL_ARG = 10**6

# cumulative sums of ln k for n <= 128; lgamma takes over beyond
_LN_FACT_TABLE = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1, 129)))))

_RESCALE = 1e150
_LN_RESCALE = math.log(_RESCALE)


def _check_degree(value, name, cap=MAX_DEGREE):
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    if cap is not None and value > cap:
        raise ValueError(f"{name}={value} exceeds the supported cap {cap}")
    return int(value)


def _as_finite(x):
    """Return x as a float (scalar input) or float ndarray, rejecting non-finite values."""
    if isinstance(x, (int, float, np.floating, np.integer)):
        x = float(x)
        if not math.isfinite(x):
            raise ValueError(f"argument must be finite, got {x}")
        return x
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("argument must be finite")
    return x


def laguerre(p, alpha, x):
    """Generalized Laguerre polynomial L_p^alpha(x).

    Parameters
    ----------
    p : int
        Degree, 0 <= p <= MAX_DEGREE.
    alpha : int
        Associated index, alpha >= 0.
    x : float or ndarray
        Evaluation point(s); must be finite.
    """
    p = _check_degree(p, "p")
    alpha = _check_degree(alpha, "alpha", cap=None)
    x = _as_finite(x)
    one = x * 0.0 + 1.0
    if p == 0:
        return one
    prev = one
    cur = 1.0 + alpha - x
    for k in range(2, p + 1):
        prev, cur = cur, ((2.0 * k - 1.0 + alpha - x) * cur - (k - 1.0 + alpha) * prev) / k
    return cur


def laguerre_scaled(p, alpha, x):
    """L_p^alpha(x) as (mantissa, log_scale) with value = mantissa * exp(log_scale).

    The recurrence renormalizes whenever intermediates exceed 1e150, so the
    pair stays representable for any argument the Wigner evaluator can
    produce. Scalar in, scalar pair out; arrays broadcast.
    """
    p = _check_degree(p, "p")
    alpha = _check_degree(alpha, "alpha", cap=None)
    x = _as_finite(x)
    scalar = isinstance(x, float)
    one = x * 0.0 + 1.0
    if p == 0:
        return one, x * 0.0
    prev = one
    cur = 1.0 + alpha - x
    shift = x * 0.0
    for k in range(2, p + 1):
        prev, cur = cur, ((2.0 * k - 1.0 + alpha - x) * cur - (k - 1.0 + alpha) * prev) / k
        if scalar:
            if abs(cur) > _RESCALE or abs(prev) > _RESCALE:
                prev /= _RESCALE
                cur /= _RESCALE
                shift += _LN_RESCALE
        else:
            big = (np.abs(cur) > _RESCALE) | (np.abs(prev) > _RESCALE)
            if np.any(big):
                factor = np.where(big, 1.0 / _RESCALE, 1.0)
                prev = prev * factor
                cur = cur * factor
                shift = shift + np.where(big, _LN_RESCALE, 0.0)
    return cur, shift


def hermite(n, x):
    """Physicists' Hermite polynomial H_n(x); n <= MAX_DEGREE, x finite."""
    n = _check_degree(n, "n")
    x = _as_finite(x)
    one = x * 0.0 + 1.0
    if n == 0:
        return one
    prev = one
    cur = 2.0 * x
    for k in range(2, n + 1):
        prev, cur = cur, 2.0 * x * cur - 2.0 * (k - 1.0) * prev
    return cur


def ln_factorial(n):
    """ln(n!) for 0 <= n <= 1e6, relative error below 1e-12."""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > MAX_FACTORIAL_ARG:
        raise ValueError(f"n={n} exceeds the supported cap {MAX_FACTORIAL_ARG}")
    if n < _LN_FACT_TABLE.size:
        return float(_LN_FACT_TABLE[n])
    return math.lgamma(n + 1.0)

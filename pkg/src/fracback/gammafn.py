"""Gamma-function evaluation: native precision and float-expansion precision.

The native path wraps ``math.gamma`` for positive arguments and applies the
reflection formula for negative ones, with exact range reduction inside
sin(pi*x) so the composite stays within a few ulp for |x| <= 50.

The expansion path never calls reflection: 1/Gamma is evaluated on the base
interval [1, 2] from an embedded Taylor table and moved to the target argument
with the recurrence Gamma(x+1) = x*Gamma(x), which is pure expansion
multiplication.  At a non-positive integer argument the recurrence product
contains an exact zero factor, so 1/Gamma comes out exactly 0 there.
"""

from __future__ import annotations

import math

import numpy as np

from . import expansion as xp
from ._gamma_data import BERNOULLI_STIRLING, LN_SQRT_2PI, RECIP_GAMMA_TAYLOR_15

POLE_TOL = 1e-12

#: Relative accuracy of expansion-precision 1/Gamma, by limb count.  Dominated
#: by the absolute error of the Stirling log-gamma (magnitude up to ~2e3).
RECIP_GAMMA_EPS = {2: 4.0e-28, 3: 6.0e-44, 4: 5.0e-60}


class GammaPoleError(ValueError):
    """Argument is (numerically) a non-positive integer."""


def is_pole(x: float, tol: float = POLE_TOL) -> bool:
    n = round(x)
    return n <= 0 and abs(x - n) <= tol


def sinpi(x: float) -> float:
    """sin(pi*x) with exact argument reduction (x assumed |x| < 2**52)."""
    n = round(x)
    r = x - n
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def gamma(x: float) -> float:
    """Euler gamma on the real line, poles excluded.

    Relative error a few ulp for |x| <= 50; negative arguments go through
    the reflection formula Gamma(x) = pi / (sin(pi*x) * Gamma(1-x)).
    """
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"gamma argument must be finite, got {x}")
    if is_pole(x):
        raise GammaPoleError(f"gamma pole at non-positive integer argument {x}")
    if x > 0:
        return math.gamma(x)
    return math.pi / (sinpi(x) * math.gamma(1.0 - x))


def lgamma_abs(x: float) -> float:
    """log|Gamma(x)| for non-pole x, via reflection when x < 0."""
    if x > 0:
        return math.lgamma(x)
    return math.log(math.pi) - math.log(abs(sinpi(x))) - math.lgamma(1.0 - x)


def recip_gamma(x: float) -> float:
    """1/Gamma(x); exactly 0.0 within POLE_TOL of a non-positive integer."""
    if is_pole(x):
        return 0.0
    if 0.0 < x <= 170.0:
        return 1.0 / math.gamma(x)
    if x > 170.0:
        return math.exp(-math.lgamma(x))
    return sinpi(x) * math.exp(math.lgamma(1.0 - x)) / math.pi


def recip_gamma_eps(x: float) -> float:
    """Relative error estimate of :func:`recip_gamma` at x (non-pole)."""
    if 0.0 < x <= 170.0:
        return 5e-16
    return (8.0 + abs(lgamma_abs(x))) * 1.2e-16


def recip_gamma_linear(a: float, n: int, b: float) -> tuple[float, float]:
    """Accurate 1/Gamma(a*n + b) with an error bound, poles exact.

    The argument is formed in double-double (two_prod is exact), so the
    distance to the nearest pole is known to ~1e-30 absolute.  Near a pole
    the reflection formula is driven by that accurate distance, which keeps
    the tiny coefficient fully accurate instead of skipping or inflating it;
    a distance below resolution returns an exact zero.

    Returns ``(value, relative_error_bound)``.
    """
    from .expansion import two_prod, two_sum

    p, e = two_prod(a, float(n))
    hi, err = two_sum(b, p)
    lo = err + e
    x = hi + lo
    m = round(x)
    dist = abs(x - m)
    if m > 0 or dist > 0.25:
        if is_pole(x):  # only x == 0 exactly can land here
            return 0.0, 0.0
        eps = recip_gamma_eps(x) + 1.65e-16 * abs(x) * (1.0 + math.log(2.0 + abs(x)))
        return recip_gamma(x), eps
    # near-pole branch: x = m + delta with m <= 0
    delta = (hi - m) + lo
    resol = 1e-30 * (1.0 + abs(x))
    if abs(delta) <= resol:
        return 0.0, 0.0
    # 1/Gamma(x) = sin(pi*x) * Gamma(1-x) / pi,  sin(pi*x) = (-1)^m sin(pi*delta)
    s = math.sin(math.pi * delta)
    if m % 2:
        s = -s
    lg = math.lgamma(1.0 - x)
    c = s * math.exp(lg) / math.pi
    eps = 1e-15 + 1.2e-16 * abs(lg) + resol / abs(delta)
    return c, eps


_TAYLOR4 = np.array(RECIP_GAMMA_TAYLOR_15)  # shape (60, 4)


def recip_gamma_limbs(x: np.ndarray, k: int) -> np.ndarray:
    """Vectorized k-limb 1/Gamma over a float array of arguments.

    Plain-limb convenience wrapper around the scaled variant; the argument
    range -40 <= x <= 170 keeps the recombined value in normal double range.
    """
    mant, e = recip_gamma_limbs_scaled(x, k)
    return xp.ldexp(mant, e)


def recip_gamma_limbs_scaled(x: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """k-limb 1/Gamma with a separate power-of-two exponent.

    Returns ``(mantissa, e)`` with 1/Gamma(x) == mantissa * 2**e, so arguments
    far beyond the double-precision Gamma overflow point stay representable.
    """
    x = np.asarray(x, dtype=float)
    mant, e = recip_gamma_limbs_scaled_x(xp.from_float(x.ravel(), k))
    return mant.reshape((k,) + x.shape), e.reshape(x.shape)


def recip_gamma_limbs_scaled_x(xl: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Scaled k-limb 1/Gamma of an expansion-valued argument (1-d batch).

    Taking the argument as an expansion matters when it is itself a product
    (e.g. rho*n + mu): rounding it to one float first would cost
    |psi(x)| * ulp(x) of relative accuracy, far above the limb precision.

    Arguments below 40 use the base-interval Taylor table plus a recurrence
    climb of at most ~40 exact products; larger arguments go through a
    Stirling log-gamma evaluated entirely in expansion arithmetic, with the
    result exponent carried separately so the double range never binds.
    """
    k = xl.shape[0]
    x = xp.to_float(xl)
    mant = np.zeros_like(xl)
    e = np.zeros(x.shape, dtype=np.int64)
    big = x >= 40.0
    if big.any():
        mant_b, e_b = _recip_gamma_stirling(xl[:, big])
        mant[:, big] = mant_b
        e[big] = e_b
    if not big.all():
        mant_s = _recip_gamma_taylor_climb(xl[:, ~big])
        mant[:, ~big] = mant_s
    return mant, e


def _recip_gamma_stirling(xl: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    k = xl.shape[0]
    lnx = xp.log_pos(xl)
    t1 = xp.mul(xp.add_float(xl, -0.5), lnx)
    rx = xp.recip(xl)
    w = xp.mul(rx, rx)
    s = np.zeros_like(xl)
    for j in range(len(BERNOULLI_STIRLING) - 1, -1, -1):
        s = xp.mul(s, w)
        s = xp.add(s, xp.const(BERNOULLI_STIRLING[j], k, xl.ndim - 1))
    s = xp.mul(s, rx)
    lng = xp.add(xp.add(xp.sub(t1, xl), xp.const(LN_SQRT_2PI, k, xl.ndim - 1)), s)
    return xp.exp_scaled(-lng)


def _recip_gamma_taylor_climb(xl: np.ndarray) -> np.ndarray:
    k = xl.shape[0]
    x = xp.to_float(xl)
    m = np.round(x - 1.5).astype(int)
    base = xp.add_float(xl, -m.astype(float))
    s = xp.add_float(base, -1.5)

    coeffs = _TAYLOR4[:, :k]
    g = np.zeros((k,) + x.shape)
    for j in range(len(coeffs) - 1, -1, -1):
        g = xp.mul(g, s)
        g = xp.add(g, coeffs[j].reshape((k,) + (1,) * x.ndim))

    # 1/Gamma(x) = (1/Gamma(base)) / prod_{j<m}(base+j)   (m > 0)
    # 1/Gamma(x) = (1/Gamma(base)) * prod_{i<|m|}(x+i)    (m < 0)
    mmax = int(m.max(initial=0))
    if mmax > 0:
        prod = xp.from_float(np.ones(x.shape), k)
        for j in range(mmax):
            mask = m > j
            upd = xp.mul(prod, xp.add_float(base, float(j)))
            prod = np.where(mask, upd, prod)
        g = np.where(m > 0, xp.div(g, prod), g)
    mmin = int(m.min(initial=0))
    if mmin < 0:
        prod = xp.from_float(np.ones(x.shape), k)
        for i in range(-mmin):
            mask = m < -i
            upd = xp.mul(prod, xp.add_float(xl, float(i)))
            prod = np.where(mask, upd, prod)
        g = np.where(m < 0, xp.mul(g, prod), g)
    return g

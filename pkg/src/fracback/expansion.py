"""Fixed-length float-expansion arithmetic built on error-free transformations.

A value is represented as an unevaluated sum of ``K`` native floats ("limbs"),
stored along axis 0 of an ndarray of shape ``(K, ...)``, most significant limb
first.  ``K = 2`` is classic double-double (~31 significant digits); ``K = 4``
gives ~63.  All operations work elementwise on arbitrary trailing shapes, so
the same code serves scalars and batched evaluation.

No directed rounding or FMA is assumed: products use the Dekker split, which
is exact for |x| < 2**996.
"""

from __future__ import annotations

import math

import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    """Knuth two-sum: s + e == a + b exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def two_prod(a, b):
    """Dekker two-product: p + e == a * b exactly (no FMA required)."""
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


def _distill(parts, k):
    """Compress a list of float arrays into k limbs.

    Repeated two-sum sweeps (cascaded accumulation): each pass extracts the
    float nearest the exact remaining sum and leaves the exact residuals for
    the next pass.  The discarded residual after k passes is O(2**-53k) of
    the total.
    """
    out = []
    work = list(parts)
    for _ in range(k):
        if not work:
            out.append(np.zeros_like(out[0]))
            continue
        s = work[0]
        errs = []
        for x in work[1:]:
            s, e = two_sum(s, x)
            errs.append(e)
        out.append(s)
        work = errs
    return np.stack(out)


def from_float(x, k):
    """Promote a float array to a k-limb expansion."""
    x = np.asarray(x, dtype=float)
    limbs = np.zeros((k,) + x.shape)
    limbs[0] = x
    return limbs


def to_float(a):
    """Round an expansion back to a single float array."""
    s = a[-1].copy()
    for i in range(a.shape[0] - 2, -1, -1):
        s = s + a[i]
    return s


def add(a, b):
    k = a.shape[0]
    a, b = np.broadcast_arrays(a, b)
    return _distill([a[i] for i in range(k)] + [b[i] for i in range(k)], k)


def neg(a):
    return -a


def sub(a, b):
    return add(a, -b)


def mul(a, b):
    """Expansion product, truncated to the input limb count.

    Partial products with i + j > k fall at least k+1 limbs below the leading
    term and are dropped; the i + j == k diagonal keeps only the rounded part.
    """
    k = a.shape[0]
    a, b = np.broadcast_arrays(a, b)
    parts = []
    for i in range(k):
        for j in range(k - i):
            p, e = two_prod(a[i], b[j])
            parts.append(p)
            if i + j < k - 1:
                parts.append(e)
    return _distill(parts, k)


def scale(a, f):
    """Multiply an expansion by a plain float array (exact partial products)."""
    k = a.shape[0]
    f = np.asarray(f, dtype=float)
    parts = []
    for i in range(k):
        p, e = two_prod(a[i], f)
        parts.append(p)
        if i < k - 1:
            parts.append(e)
    return _distill(parts, k)


def add_float(a, f):
    k = a.shape[0]
    f = np.broadcast_to(np.asarray(f, dtype=float), a.shape[1:])
    return _distill([a[i] for i in range(k)] + [f.astype(float)], k)


def div(a, b):
    """Long division: k+1 correction steps, each removing the leading error.

    Quotient steps divide rounded values, not leading limbs: after a
    cancelling subtraction the leading limb alone can misrepresent the
    remainder by many orders of magnitude.
    """
    k = a.shape[0]
    a, b = np.broadcast_arrays(a, b)
    bf = to_float(b)
    quots = []
    r = a
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for _ in range(k + 1):
            q = to_float(r) / bf
            quots.append(q)
            r = sub(r, scale(b, q))
    return _distill(quots, k)


def recip(b):
    return div(from_float(np.ones(b.shape[1:]), b.shape[0]), b)


def ldexp(a, e):
    """Exact scaling by 2**e (elementwise integer e)."""
    return np.ldexp(a, np.asarray(e)[None, ...])


def const(limbs, k, ndim=0):
    """A stored constant as a k-limb array broadcastable over ndim axes."""
    return np.array(limbs[:k]).reshape((k,) + (1,) * ndim)


_INV_FACT: dict[int, list[np.ndarray]] = {}


def _inv_fact(k):
    tab = _INV_FACT.get(k)
    if tab is None:
        tab = []
        for j in range(19):
            f = float(math.factorial(j))  # exact below 2**53
            tab.append(div(from_float(np.ones(()), k), from_float(f, k)))
        _INV_FACT[k] = tab
    return tab


def exp_scaled(a):
    """Elementwise exp of an expansion, as (mantissa, int exponent) base 2.

    Argument reduction by ln 2 and by 2**-8, an 18-term Taylor core, then
    eight squarings; |a| up to ~1e4 is safe, which covers log-gamma use.
    """
    from ._gamma_data import LN2

    k = a.shape[0]
    e2 = np.round(to_float(a) / math.log(2.0))
    r = sub(a, scale(const(LN2, k, a.ndim - 1), e2))
    r = np.ldexp(r, -8)
    fact = _inv_fact(k)
    m = from_float(np.zeros(a.shape[1:]), k)
    for j in range(18, -1, -1):
        m = mul(m, r)
        m = add(m, fact[j].reshape((k,) + (1,) * (a.ndim - 1)))
    for _ in range(8):
        m = mul(m, m)
    return m, e2.astype(np.int64)


def log_pos(a):
    """Elementwise natural log of a positive expansion (Newton on exp)."""
    k = a.shape[0]
    y = from_float(np.log(to_float(a)), k)
    for _ in range(2):
        m, e2 = exp_scaled(-y)
        r = np.ldexp(mul(a, m), e2[None, ...])
        y = add(y, add_float(r, -1.0))
    return y


def rescale(a, lo=2.0**-256, hi=2.0**256):
    """Pull the magnitude of ``a`` into [lo, hi], returning (a', e) with
    a == a' * 2**e.  Zero entries stay put."""
    mag = np.abs(to_float(a))
    e = np.zeros(a.shape[1:], dtype=np.int64)
    need = (mag > hi) | ((mag < lo) & (mag > 0.0))
    if np.any(need):
        ex = np.where(need, np.frexp(np.where(mag > 0, mag, 1.0))[1], 0)
        a = ldexp(a, -ex)
        e = ex.astype(np.int64)
    return a, e

"""Two-parameter Mittag-Leffler function on the non-positive real axis.

``E_{rho,mu}(z) = sum_n z^n / Gamma(rho*n + mu)`` is alternating for z < 0
and loses roughly ``|z|**(1/rho) / ln 10`` decimal digits to cancellation, so
no single formula covers the whole axis.  Three regimes are used:

* plain double-precision power series,
* the same series in float-expansion arithmetic (double-double by default,
  escalating to four limbs when the running cancellation estimate demands),
* the algebraic large-argument expansion
  ``-sum_{n>=1} z^{-n} / Gamma(mu - rho*n)`` truncated at its smallest term.

Every regime tracks an a-posteriori relative error bound (summation noise,
coefficient error, truncation tail).  A value is accepted only when that
certificate meets the requested tolerance; regimes are tried in the order
suggested by the configured cutoffs and the remaining ones serve as
fallbacks.  Gamma poles inside terms contribute exact zeros and are skipped.

Vectorized entry points evaluate whole batches per regime, which is what the
solvers use on time grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import expansion as xp
from . import gammafn

__all__ = [
    "FractionalOrder",
    "MlfConfig",
    "MlfConvergenceError",
    "DEFAULT_CONFIG",
    "mlf",
    "mlf_many",
    "kernel",
    "kernel_many",
    "kernel_grid",
    "kernel_dm",
    "kernel_dm_many",
]

_U = 2.0**-53
_LN10 = math.log(10.0)
_TINY = 1e-300


class MlfConvergenceError(ArithmeticError):
    """No evaluation regime certified the requested relative accuracy."""


@dataclass(frozen=True)
class FractionalOrder:
    """Time-derivative order, restricted to the strict interval (0, 1)."""

    rho: float

    def __post_init__(self) -> None:
        if not (isinstance(self.rho, (int, float)) and 0.0 < float(self.rho) < 1.0):
            raise ValueError(f"fractional order must lie strictly in (0, 1), got {self.rho!r}")
        object.__setattr__(self, "rho", float(self.rho))


def as_order(rho) -> float:
    """Accept a FractionalOrder or a bare float in (0, 1)."""
    if isinstance(rho, FractionalOrder):
        return rho.rho
    return FractionalOrder(float(rho)).rho


@dataclass(frozen=True)
class MlfConfig:
    """Regime cutoffs and accuracy demands for Mittag-Leffler evaluation."""

    series_cutoff: float = 5.0
    asymptotic_cutoff: float = 50.0
    target_rel_err: float = 1e-11
    max_terms: int = 1200

    def __post_init__(self) -> None:
        if not 0.0 < self.series_cutoff < self.asymptotic_cutoff:
            raise ValueError("cutoffs must satisfy 0 < series_cutoff < asymptotic_cutoff")
        if self.target_rel_err <= 0.0:
            raise ValueError("target_rel_err must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_CONFIG = MlfConfig()


# {{{ coefficient tables


class _SeriesTable:
    """Float coefficients 1/Gamma(rho*n + mu) with per-term error bounds.

    ``lgc`` is the log of the smooth coefficient envelope (sine-free), used
    for planning how many terms an expansion-precision evaluation needs.
    """

    __slots__ = ("rho", "mu", "c", "eps", "lgc")

    def __init__(self, rho: float, mu: float) -> None:
        self.rho = rho
        self.mu = mu
        self.c: list[float] = []
        self.eps: list[float] = []
        self.lgc: list[float] = []

    def extend(self, n: int) -> None:
        while len(self.c) <= n:
            k = len(self.c)
            c, eps = gammafn.recip_gamma_linear(self.rho, k, self.mu)
            self.c.append(c)
            self.eps.append(eps)
            x = self.rho * k + self.mu
            self.lgc.append(-gammafn.lgamma_abs(x) if not gammafn.is_pole(x) else -math.inf)

    def lgc_array(self, n: int) -> np.ndarray:
        self.extend(n)
        return np.asarray(self.lgc[: n + 1])


class _AsymTable:
    """Coefficients 1/Gamma(mu - rho*n) plus the log of the sine-free
    envelope |Gamma(1 - mu + rho*n)| / pi.

    The raw coefficient magnitudes oscillate with the reflection sine factor;
    the envelope is what decays and grows monotonically, so truncation
    decisions are made against it.
    """

    __slots__ = ("rho", "mu", "c", "eps", "lgenv")

    def __init__(self, rho: float, mu: float) -> None:
        self.rho = rho
        self.mu = mu
        self.c: list[float] = [0.0]
        self.eps: list[float] = [0.0]
        self.lgenv: list[float] = [-math.inf]

    def extend(self, n: int) -> None:
        while len(self.c) <= n:
            k = len(self.c)
            c, eps = gammafn.recip_gamma_linear(-self.rho, k, self.mu)
            self.c.append(c)
            self.eps.append(eps)
            x = self.mu - self.rho * k
            self.lgenv.append(gammafn.lgamma_abs(1.0 - x) - math.log(math.pi))


_series_tables: dict[tuple[float, float], _SeriesTable] = {}
_asym_tables: dict[tuple[float, float], _AsymTable] = {}
_limb_tables: dict[tuple[float, float, int], list] = {}


def _series_table(rho: float, mu: float, n: int) -> _SeriesTable:
    tab = _series_tables.get((rho, mu))
    if tab is None:
        tab = _series_tables.setdefault((rho, mu), _SeriesTable(rho, mu))
    tab.extend(n)
    return tab


def _asym_table(rho: float, mu: float, n: int) -> _AsymTable:
    tab = _asym_tables.get((rho, mu))
    if tab is None:
        tab = _asym_tables.setdefault((rho, mu), _AsymTable(rho, mu))
    tab.extend(n)
    return tab


_LIMB_BLOCK = 160


def _limb_table(rho: float, mu: float, k: int, n: int):
    """Expansion coefficients 1/Gamma(rho*n + mu) as (mantissa, exponent).

    The argument is formed exactly (two_prod of rho and the integer index),
    so coefficient accuracy is the expansion gamma accuracy itself.
    """
    key = (rho, mu, k)
    entry = _limb_tables.get(key)
    if entry is None:
        entry = [np.zeros((k, 0)), np.zeros(0, dtype=np.int64)]
        _limb_tables[key] = entry
    while entry[0].shape[1] <= n:
        lo = entry[0].shape[1]
        hi = lo + _LIMB_BLOCK
        ns = np.arange(lo, hi, dtype=float)
        p, e = xp.two_prod(np.full(ns.shape, rho), ns)
        args = xp._distill([p, e, np.full(ns.shape, mu)], k)
        mant, ex = gammafn.recip_gamma_limbs_scaled_x(args)
        entry[0] = np.concatenate([entry[0], mant], axis=1)
        entry[1] = np.concatenate([entry[1], ex])
    return entry


# }}}


# {{{ regimes

# Each regime returns (value, certificate) arrays over its input points. The
# certificate is an upper estimate of the relative error; np.inf marks points
# the regime could not finish.


def _series_float(rho: float, mu: float, t: np.ndarray, target: float, max_terms: int):
    P = t.size
    out_v = np.zeros(P)
    out_c = np.full(P, np.inf)

    idx = np.arange(P)
    z = -t.copy()
    pw = np.ones(P)
    S = np.zeros(P)
    absS = np.zeros(P)
    errS = np.zeros(P)
    prev = np.full(P, np.inf)
    last = np.zeros(P)
    smallc = np.zeros(P, dtype=np.int8)

    def finish(sel: np.ndarray, n_used: int, ok: bool) -> None:
        if not sel.any():
            return
        j = idx[sel]
        out_v[j] = S[sel]
        if ok:
            av = np.abs(S[sel])
            noise = errS[sel] + 2.0 * last[sel] + (n_used + 4) * _U * absS[sel]
            with np.errstate(divide="ignore", invalid="ignore"):
                c = np.where(av > 0.0, noise / np.maximum(av, _TINY), np.where(absS[sel] == 0.0, 0.0, np.inf))
            out_c[j] = c

    tab = _series_table(rho, mu, min(64, max_terms))
    n = 0
    while idx.size:
        if n > max_terms:
            finish(np.ones(idx.size, dtype=bool), n, False)
            break
        tab.extend(n)
        c, ce = tab.c[n], tab.eps[n]
        if c != 0.0:
            term = pw * c
            at = np.abs(term)
            S = S + term
            absS = absS + at
            errS = errS + at * (ce + (n + 3) * _U)
            # stopping is only trusted where Gamma(rho*n + mu) is past its
            # minimum, so the term envelope decays monotonically
            if rho * n + mu > 2.0:
                declining = at < prev
                tiny = at <= np.abs(S) * (target * 0.02) + _TINY
                smallc = np.where(declining & tiny, smallc + 1, 0).astype(np.int8)
            last = at
            prev = np.where(at > 0, at, prev)
            done = smallc >= 2
            if done.any():
                finish(done, n, True)
                keep = ~done
                idx, z, pw, S, absS, errS, prev, last, smallc = (
                    a[keep] for a in (idx, z, pw, S, absS, errS, prev, last, smallc)
                )
                if not idx.size:
                    break
        with np.errstate(over="ignore", invalid="ignore"):
            pw = pw * z
        bad = ~np.isfinite(pw) | (np.abs(pw) > 1e290)
        if bad.any():
            finish(bad, n, False)
            keep = ~bad
            idx, z, pw, S, absS, errS, prev, last, smallc = (
                a[keep] for a in (idx, z, pw, S, absS, errS, prev, last, smallc)
            )
        n += 1
    return out_v, out_c


def _plan_terms(rho: float, mu: float, lnt: np.ndarray, cut: np.ndarray, max_terms: int) -> int:
    """Largest series index whose smooth-envelope term exceeds the cut level.

    Scans ln|term(n, p)| = lgc[n] + n*ln(t_p) in blocks; stops after two
    all-quiet blocks (the envelope is unimodal in n past the early spikes).
    """
    tab = _series_table(rho, mu, 8)
    last = 8
    quiet = 0
    n0 = 0
    while n0 <= max_terms and quiet < 2:
        n1 = min(n0 + 128, max_terms + 1)
        ns = np.arange(n0, n1, dtype=float)
        lgc = tab.lgc_array(n1 - 1)[n0:n1]
        above = lgc[:, None] + ns[:, None] * lnt[None, :] > cut[None, :]
        if above.any():
            quiet = 0
            rows = np.flatnonzero(above.any(axis=1))
            last = max(last, n0 + int(rows.max()))
        else:
            quiet += 1
        n0 = n1
    return min(last + 1, max_terms)


def _scaled_powers(z: np.ndarray, k: int, n: int):
    """Expansion powers z**0..z**n with per-entry binary exponents.

    Built by doubling (z**(m+j) = z**m * z**j), so the whole table costs
    O(log n) vectorized expansion products regardless of n.
    """
    c = z.size
    mant = np.zeros((k, n + 1, c))
    mant[0, 0] = 1.0
    pe = np.zeros((n + 1, c), dtype=np.int64)
    m = 1
    while m <= n:
        q = xp.scale(mant[:, m - 1], z)
        qe = pe[m - 1].copy()
        q, sh = xp.rescale(q)
        qe += sh
        hi = min(2 * m, n + 1)
        cnt = hi - m
        blk = xp.mul(mant[:, :cnt], q[:, None, :])
        be = pe[:cnt] + qe[None, :]
        blk, sh = xp.rescale(blk)
        mant[:, m:hi] = blk
        pe[m:hi] = be + sh
        m = hi
    return mant, pe


def _tree_sum(terms: np.ndarray) -> np.ndarray:
    s = terms
    while s.shape[1] > 1:
        n2 = (s.shape[1] // 2) * 2
        red = xp.add(s[:, 0:n2:2], s[:, 1:n2:2])
        if s.shape[1] % 2:
            red = np.concatenate([red, s[:, n2:]], axis=1)
        s = red
    return s[:, 0]


def _series_limb(
    rho: float,
    mu: float,
    t: np.ndarray,
    k: int,
    target: float,
    max_terms: int,
    est_lns: np.ndarray,
):
    P = t.size
    out_v = np.zeros(P)
    out_c = np.full(P, np.inf)
    uk = 2.0 ** (-53 * k) * 4.0
    epsg = gammafn.RECIP_GAMMA_EPS[k]

    lnt = np.log(t)  # limb path requires t > 0
    cut = np.minimum(est_lns, 0.0) + math.log(target) - 16.0
    n_top = _plan_terms(rho, mu, lnt, cut, max_terms)
    mant, mexp = _limb_table(rho, mu, k, n_top)
    mant = mant[:, : n_top + 1]
    mexp = mexp[: n_top + 1]

    chunk = max(32, int(4e6 // (k * (n_top + 1))))
    for lo in range(0, P, chunk):
        sl = slice(lo, min(lo + chunk, P))
        pm, pe = _scaled_powers(-t[sl], k, n_top)
        tm = xp.mul(pm, mant[:, :, None])
        te = np.clip(pe + mexp[:, None], -60000, 60000).astype(np.int32)
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            tm = np.ldexp(tm, te[None, :, :])
        tv = xp.to_float(tm)
        ok = np.all(np.isfinite(tv), axis=0)
        tv = np.where(np.isfinite(tv), tv, 0.0)
        atv = np.abs(tv)
        s = _tree_sum(tm)
        sv = xp.to_float(s)
        absS = atv.sum(axis=0)
        tail = 4.0 * atv[-1]
        noise = absS * (epsg + (2.0 * math.log2(n_top + 1) + 8.0) * uk) + tail
        av = np.abs(sv)
        with np.errstate(divide="ignore", invalid="ignore"):
            cert = np.where(
                av > 0.0, noise / np.maximum(av, _TINY), np.where(absS == 0.0, 0.0, np.inf)
            )
        cert = np.where(ok & np.isfinite(sv), cert, np.inf)
        out_v[sl] = np.where(np.isfinite(sv), sv, 0.0)
        out_c[sl] = cert
    return out_v, out_c


def _asymptotic(rho: float, mu: float, t: np.ndarray, target: float, max_terms: int):
    P = t.size
    out_v = np.zeros(P)
    out_c = np.full(P, np.inf)

    idx = np.arange(P)
    with np.errstate(divide="ignore"):
        lnw = -np.log(t)
    w = np.zeros(P)
    np.divide(1.0, t, out=w, where=t > 0)
    pw = np.ones(P)
    S = np.zeros(P)
    absS = np.zeros(P)
    errS = np.zeros(P)
    skipq = np.zeros(P)
    prev_env = np.full(P, np.inf)
    nz_seen = np.zeros(P, dtype=bool)

    def finish(sel: np.ndarray, rem: np.ndarray, n_used: int) -> None:
        if not sel.any():
            return
        j = idx[sel]
        out_v[j] = S[sel]
        av = np.abs(S[sel])
        noise = rem[sel] + errS[sel] + skipq[sel] + (n_used + 4) * _U * absS[sel]
        ok = nz_seen[sel]
        with np.errstate(divide="ignore", invalid="ignore"):
            c = np.where(ok & (av > 0.0), noise / np.maximum(av, _TINY), np.inf)
        out_c[j] = c

    tab = _asym_table(rho, mu, min(32, max_terms))
    n = 1
    while idx.size:
        tab.extend(n)
        d, de, lgenv = tab.c[n], tab.eps[n], tab.lgenv[n]
        pw = pw * w
        with np.errstate(over="ignore"):
            env = np.exp(lgenv + n * lnw)
        # the sine-free envelope bounds every term; past its minimum the
        # expansion diverges, so freeze there (standard optimal truncation).
        # raw |term| is useless for these decisions: the sine factor can dip
        # arbitrarily near a pole without the series being anywhere near done
        grow = nz_seen & (env > prev_env)
        if n > max_terms:
            grow = np.ones(idx.size, dtype=bool)
        conv = ~grow & nz_seen & (env <= np.abs(S) * 1e-16)
        alive = ~(grow | conv)
        if d == 0.0:
            skipq = skipq + np.where(alive, 1e-27 * env, 0.0)
        else:
            with np.errstate(over="ignore", invalid="ignore"):
                term = (pw if n % 2 else -pw) * d
            nf = ~np.isfinite(term)
            grow = grow | (alive & nf)
            alive &= ~nf
            term = np.where(nf, 0.0, term)
            at = np.abs(term)
            S = np.where(alive, S + term, S)
            absS = absS + np.where(alive, at, 0.0)
            errS = errS + np.where(alive, at * (de + (n + 3) * _U), 0.0)
            nz_seen = nz_seen | alive
        done = grow | conv
        prev_env = env
        if done.any():
            rem = np.where(grow, 2.0 * env, 200.0 * np.maximum(env, 0.0))
            rem = np.where(np.isfinite(rem), rem, np.inf)
            finish(done, rem, n)
            keep = ~done
            idx, lnw, w, pw, S, absS, errS, skipq, prev_env, nz_seen = (
                a[keep]
                for a in (idx, lnw, w, pw, S, absS, errS, skipq, prev_env, nz_seen)
            )
        n += 1
    return out_v, out_c


# }}}


# {{{ regime selection


def _est_ln_abs(rho: float, mu: float, t: np.ndarray) -> np.ndarray:
    """ln of a rough magnitude estimate of E_{rho,mu}(-t), for routing only."""
    est = np.full(t.shape, -np.inf)
    stab = _series_table(rho, mu, 3)
    pos = t > 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        lnt = np.where(pos, np.log(np.where(pos, t, 1.0)), 0.0)
        for j in range(4):
            if stab.c[j] != 0.0:
                lg = math.log(abs(stab.c[j])) + (j * lnt if j else 0.0)
                cand = np.where(pos | (j == 0), lg, -np.inf)
                est = np.maximum(est, np.where(t <= 1.5, cand, -np.inf))
        if rho == 1.0:
            est = np.maximum(est, np.where(t > 1.5, -t, -np.inf))
        else:
            atab = _asym_table(rho, mu, 8)
            for j in range(1, 8):
                if atab.c[j] != 0.0:
                    est = np.maximum(
                        est,
                        np.where(t > 1.5, math.log(abs(atab.c[j])) - j * lnt, -np.inf),
                    )
    return est


def _digits_hint(rho: float, t: np.ndarray, est_lns: np.ndarray) -> np.ndarray:
    """Decimal digits the alternating series loses at -t (crude, for routing)."""
    with np.errstate(over="ignore"):
        nats = t if rho == 1.0 else t ** (1.0 / rho)
    return (nats - np.minimum(np.where(np.isfinite(est_lns), est_lns, 0.0), 0.0)) / _LN10


#: certifiable decimal digits per regime (expansion ones bounded by the
#: expansion-gamma accuracy, not the raw limb precision)
_CAP = {"float": 15.0, 2: 25.6, 4: 57.3}


def mlf_many(rho: float, mu: float, z, cfg: MlfConfig | None = None) -> np.ndarray:
    """Vectorized E_{rho,mu} over an array of non-positive arguments.

    Raises MlfConvergenceError if any point cannot be certified to
    cfg.target_rel_err within cfg.max_terms per regime.
    """
    cfg = cfg or DEFAULT_CONFIG
    rho = float(rho)
    if not 0.0 < rho <= 1.0:
        raise ValueError(f"rho must lie in (0, 1], got {rho}")
    mu = float(mu)
    if not math.isfinite(mu):
        raise ValueError("mu must be finite")
    z = np.asarray(z, dtype=float)
    if z.size == 0:
        return np.zeros(z.shape)
    if not np.all(np.isfinite(z)):
        raise ValueError("arguments must be finite")
    if np.any(z > 0.0):
        raise ValueError("arguments must be non-positive")

    t = (-z).ravel()
    val = np.full(t.shape, np.nan)
    crt = np.full(t.shape, np.inf)
    target = cfg.target_rel_err
    need_digits = -math.log10(target)

    small = t <= cfg.series_cutoff
    large = t >= cfg.asymptotic_cutoff
    mid = ~small & ~large
    plan = [
        (small, ("float", 2, 4, "asym")),
        (mid, (2, 4, "asym", "float")),
        (large, ("asym", 4, 2)),
    ]
    for gmask, order in plan:
        pend = np.flatnonzero(gmask)
        for regime in order:
            if pend.size == 0:
                break
            tt = t[pend]
            if regime == "asym":
                elig = tt > 0.0
            else:
                cap = _CAP[regime]
                hint = _digits_hint(rho, mu, tt)
                elig = (hint <= cap - need_digits + 2.0) | (tt <= 1.5)
            if not elig.any():
                continue
            sub = pend[elig]
            if regime == "float":
                v, c = _series_float(rho, mu, t[sub], target, cfg.max_terms)
            elif regime == "asym":
                v, c = _asymptotic(rho, mu, t[sub], target, cfg.max_terms)
            else:
                v, c = _series_limb(rho, mu, t[sub], regime, target, cfg.max_terms)
            better = c < crt[sub]
            val[sub[better]] = v[better]
            crt[sub[better]] = c[better]
            pend = pend[~(crt[pend] <= target)]

    bad = ~(crt <= target)
    if bad.any():
        i = int(np.argmax(np.where(bad, crt, -np.inf)))
        raise MlfConvergenceError(
            f"mlf(rho={rho}, mu={mu}) failed to certify {int(bad.sum())} of {t.size} "
            f"points to {target:.1e}; worst z={-t[i]:.6g} reached {crt[i]:.2e}"
        )
    return val.reshape(z.shape)


def mlf(rho: float, mu: float, z: float, cfg: MlfConfig | None = None) -> float:
    """E_{rho,mu}(z) for a single argument z <= 0, rho in (0, 1]."""
    return float(mlf_many(rho, mu, np.asarray([z], dtype=float), cfg)[0])


# }}}


# {{{ mode kernel


def kernel(rho, lam: float, t: float, cfg: MlfConfig | None = None) -> float:
    """Mode propagator t**(rho-1) * E_{rho,rho}(-lam * t**rho); positive for t > 0."""
    return float(kernel_dm_many(rho, lam, np.asarray([t], dtype=float), 0, cfg)[0])


def kernel_many(rho, lam: float, t, cfg: MlfConfig | None = None) -> np.ndarray:
    return kernel_dm_many(rho, lam, t, 0, cfg)


def kernel_dm(rho, lam: float, t: float, m: int, cfg: MlfConfig | None = None) -> float:
    """m-th time derivative of the mode kernel: t**(rho-1-m) * E_{rho,rho-m}(-lam*t**rho)."""
    return float(kernel_dm_many(rho, lam, np.asarray([t], dtype=float), m, cfg)[0])


def kernel_dm_many(rho, lam: float, t, m: int = 0, cfg: MlfConfig | None = None) -> np.ndarray:
    r = as_order(rho)
    if not isinstance(m, (int, np.integer)) or m < 0:
        raise ValueError(f"derivative order must be a non-negative integer, got {m!r}")
    lam = float(lam)
    if lam <= 0.0:
        raise ValueError(f"eigenvalue must be positive, got {lam}")
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0):
        raise ValueError("kernel requires t > 0")
    e = mlf_many(r, r - m, -lam * t**r, cfg)
    return t ** (r - 1.0 - m) * e


def kernel_grid(rho, lams, ts, m: int = 0, cfg: MlfConfig | None = None) -> np.ndarray:
    """Kernel derivative values on the product grid, shape (len(lams), len(ts)).

    One batched Mittag-Leffler call serves the whole grid; this is the fast
    path for multi-mode solution evaluation.
    """
    r = as_order(rho)
    lams = np.asarray(lams, dtype=float)
    ts = np.asarray(ts, dtype=float)
    if np.any(lams <= 0.0):
        raise ValueError("eigenvalues must be positive")
    if np.any(ts <= 0.0):
        raise ValueError("kernel requires t > 0")
    trho = ts**r
    e = mlf_many(r, r - m, -np.outer(lams, trho), cfg)
    return e * (ts ** (r - 1.0 - m))[None, :]


# }}}

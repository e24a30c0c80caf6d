"""Theoretical characteristic function of the value statistic.

Two independent evaluations of the same function: an Euler product over
odd prime ideals (phi_sigma) and a literal triple Dirichlet series
(mtilde_series).  Their agreement is the main internal cross-check.
Also: the binomial-type H coefficients, the multiplicative lambda_y
weights, the band of slowly-varying local factors, and decay fitting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _sieve
from .gaussint import GaussFactorization, primes_up_to


@dataclass
class CharFnParams:
    """sigma and the Euler-product truncation; tail_report is written by
    phi_sigma with the a-posteriori bound on the omitted factors."""

    sigma: float
    prime_cutoff_P: int
    tail_report: float = 0.0

    def __post_init__(self):
        if not 0.5 < self.sigma <= 4.0:
            raise ValueError("sigma must lie in (1/2, 4]")
        if self.prime_cutoff_P < 3:
            raise ValueError("prime_cutoff_P must be at least 3")


@dataclass
class SeriesCutoffs:
    """Truncation of the series route; trunc_report is written by
    mtilde_series with its a-posteriori truncation estimate."""

    r_max: int
    ideal_norm_cap: int
    trunc_report: float = 0.0

    def __post_init__(self):
        if self.r_max < 1:
            raise ValueError("r_max must be at least 1")
        if self.ideal_norm_cap < 1:
            raise ValueError("ideal_norm_cap must be at least 1")


def h_coeff(r: int, u: complex) -> complex:
    """u(u+1)...(u+r-1)/r!, by the recurrence H_r = H_{r-1} (u+r-1)/r."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    h = complex(1.0)
    for k in range(1, r + 1):
        h = h * (u + (k - 1)) / k
    return h


def _h_table(rmax: int, u: complex) -> np.ndarray:
    out = np.empty(rmax + 1, dtype=np.complex128)
    out[0] = 1.0
    for k in range(1, rmax + 1):
        out[k] = out[k - 1] * (u + (k - 1)) / k
    return out


def lambda_y(y: float, f: GaussFactorization) -> complex:
    """Multiplicative coefficient: product of H_alpha(iy) over prime powers."""
    u = 1j * y
    out = complex(1.0)
    for _, e in f.factors:
        out *= h_coeff(e, u)
    return out


def _local_logs(sigma: float, qs: np.ndarray):
    """log|1 - i^j q^-sigma| for j = 0, (1 and 3), 2, per norm."""
    u = qs.astype(np.float64) ** -sigma
    l0 = np.log1p(-u)
    l13 = 0.5 * np.log1p(u * u)
    l2 = np.log1p(u)
    return l0, l13, l2


def _factors_for(sigma: float, y: float, qs: np.ndarray) -> np.ndarray:
    l0, l13, l2 = _local_logs(sigma, qs)
    qf = qs.astype(np.float64)
    phases = (np.exp(-2j * y * l0) + 2.0 * np.exp(-2j * y * l13)
              + np.exp(-2j * y * l2))
    return 1.0 / (qf + 1.0) + qf / (4.0 * (qf + 1.0)) * phases


def local_factor(sigma: float, y: float, q: int) -> complex:
    """One Euler factor of the characteristic function at prime-ideal norm q.

    Weight 1/(q+1) on the trivial class and q/(4(q+1)) on each of the
    four character values i^j, each contributing the unit-modulus phase
    exp(-2iy log|1 - i^j q^-sigma|).  Modulus never exceeds 1.
    """
    if q % 2 == 0:
        raise ValueError("local factors are defined at odd prime-ideal norms")
    if q < 5:
        raise ValueError("smallest odd prime-ideal norm is 5")
    return complex(_factors_for(sigma, y, np.array([q], dtype=np.int64))[0])


def _odd_prime_norms(P: int) -> np.ndarray:
    nn, _, _, _ = _sieve.prime_ideal_arrays(int(P))
    return nn[nn > 2]


def prefactor(sigma: float, y: float) -> complex:
    """The ramified-prime factor exp(-2iy log(1 - 2^-sigma))."""
    return complex(np.exp(-2j * y * math.log1p(-(2.0 ** -sigma))))


def _tail_sum_bound(sigma: float, y: float, P: float) -> float:
    """Upper bound on sum |f_q - 1| over prime-ideal norms q > P.

    |f_q - 1| <= (0.14 |y| + 2.6 y^2) q^{-2 sigma} (verified numerically
    in the tests; the j-average kills the q^-sigma Taylor term), and the
    ideal count up to x is under 1.5 x / ln x, so partial summation gives
    sum_{q > P} q^{-2s} <= (3 sigma / ((2 sigma - 1) ln P)) P^{1-2s}.
    """
    cy = 0.14 * abs(y) + 2.6 * y * y
    return cy * (3.0 * sigma / ((2.0 * sigma - 1.0) * math.log(P))) \
        * P ** (1.0 - 2.0 * sigma)


def phi_sigma(sigma: float, y: float, p: CharFnParams) -> complex:
    """Euler-product value of the characteristic function at frequency y.

    Truncated at prime-ideal norm P; p.tail_report receives
    |phi| * expm1(tail bound), the worst-case effect of omitted factors.
    """
    if sigma != p.sigma:
        raise ValueError("sigma argument disagrees with params.sigma")
    qs = _odd_prime_norms(p.prime_cutoff_P)
    val = prefactor(sigma, y)
    if qs.size:
        val *= complex(np.prod(_factors_for(sigma, y, qs)))
    p.tail_report = abs(val) * math.expm1(_tail_sum_bound(sigma, y,
                                                          float(p.prime_cutoff_P)))
    return val


def phi_grid(sigma: float, ys: np.ndarray, p: CharFnParams,
             chunk: int = 128) -> np.ndarray:
    """phi_sigma over a frequency grid, vectorized over prime blocks.

    Same values as the scalar routine (identical factor order per y);
    p.tail_report is filled at the largest |y| of the grid.
    """
    if sigma != p.sigma:
        raise ValueError("sigma argument disagrees with params.sigma")
    ys = np.asarray(ys, dtype=np.float64)
    qs = _odd_prime_norms(p.prime_cutoff_P)
    l0, l13, l2 = _local_logs(sigma, qs)
    qf = qs.astype(np.float64)
    base = 1.0 / (qf + 1.0)
    amp = qf / (4.0 * (qf + 1.0))
    out = np.empty(ys.shape, dtype=np.complex128)
    for lo in range(0, ys.size, chunk):
        yb = ys[lo:lo + chunk, None]
        f = base + amp * (np.exp(-2j * yb * l0) + 2.0 * np.exp(-2j * yb * l13)
                          + np.exp(-2j * yb * l2))
        out[lo:lo + chunk] = np.prod(f, axis=1)
    out *= np.exp(-2j * ys * math.log1p(-(2.0 ** -sigma)))
    if ys.size:
        ymax = float(np.max(np.abs(ys)))
        p.tail_report = float(np.max(np.abs(out))) * math.expm1(
            _tail_sum_bound(sigma, ymax, float(p.prime_cutoff_P)))
    else:
        p.tail_report = 0.0
    return out


def phi_grid_evaluator(sigma: float, P: int):
    """Vectorized y -> phi_sigma(y) closure for the transform stage."""
    p = CharFnParams(sigma=sigma, prime_cutoff_P=P)

    def ev(ys):
        return phi_grid(sigma, np.asarray(ys, dtype=np.float64), p)

    ev.params = p
    return ev


def band_value(sigma: float, y: float, q) -> float:
    """y log(sqrt(q^{2 sigma} + 1)/(q^sigma - 1)), the local phase scale."""
    u = np.asarray(q, dtype=np.float64) ** -sigma
    return y * (0.5 * np.log1p(u * u) - np.log1p(-u))


BAND_LO = 1.35
BAND_HI = 1.77


def band_primes(sigma: float, y: float):
    """Odd prime ideals whose local phase scale falls in [1.35, 1.77].

    The norm window is roughly [(y/1.77)^(1/sigma), (y/1.35)^(1/sigma)];
    the exact inequality filters a padded scan of that window.
    """
    if y <= 0:
        raise ValueError("band is defined for y > 0")
    hi_norm = (y / BAND_LO) ** (1.0 / sigma)
    if hi_norm < 5.0:
        raise ValueError("band window sits below the smallest odd norm 5")
    # v(q) decreases in q, so scanning far enough that v(scan) < 1.35
    # provably covers the band
    scan = max(32, int(hi_norm * 1.05))
    while float(band_value(sigma, y, scan)) >= BAND_LO:
        scan *= 2
    out = []
    for rec in primes_up_to(scan):
        if rec.norm == 2:
            continue
        v = float(band_value(sigma, y, rec.norm))
        if BAND_LO <= v <= BAND_HI:
            out.append(rec)
    return out


@dataclass
class DecayRow:
    y: float
    modulus: float
    exponent_estimate: float  # log log(1/|phi|) / log y; nan if |phi| >= 1


@dataclass
class DecayReport:
    rows: list
    fitted_exponent: float = math.nan


def decay_check(sigma: float, ys, p: CharFnParams) -> DecayReport:
    """|phi_sigma| along increasing frequencies and the decay exponent.

    The estimate column is log log(1/|phi|)/log y per row; the fitted
    exponent is the least-squares slope of log log(1/|phi|) against
    log y over rows with |phi| < 1/e (where the double log is stable).
    """
    ys = [float(v) for v in ys]
    if not ys or any(v <= 0 for v in ys) or ys != sorted(ys):
        raise ValueError("ys must be positive and increasing")
    mods = np.abs(phi_grid(sigma, np.array(ys), p))
    rows = []
    xs, zs = [], []
    for y, m in zip(ys, mods):
        if 0.0 < m < 1.0:
            est = math.log(math.log(1.0 / m)) / math.log(y)
        else:
            est = math.nan
        rows.append(DecayRow(y, float(m), est))
        if 0.0 < m < math.exp(-1.0):
            xs.append(math.log(y))
            zs.append(math.log(math.log(1.0 / m)))
    report = DecayReport(rows)
    if len(xs) >= 2:
        slope = np.polyfit(np.array(xs), np.array(zs), 1)[0]
        report.fitted_exponent = float(slope)
    return report


def _mtilde_options(sigma: float, h: np.ndarray, qn: np.ndarray, cap: int):
    """Per prime ideal: the nonzero exponent assignments and weights.

    One assignment is (ea, eb, em) with ea * eb = 0, not all zero, and
    q^(ea+eb+em) <= cap.  Weight: H_{4ea+em} H_{4eb+em} q^{-(4ea+4eb+2em) sigma}
    times q/(q+1), the (1 + 1/q)^{-1} correction for a dividing prime.
    Options are sorted by their norm contribution q^(ea+eb+em).
    """
    opts = []
    for q in qn.tolist():
        corr = q / (q + 1.0)
        qs = q ** -sigma
        rows = []
        dmax = 0
        qq = 1
        while qq <= cap // q:
            qq *= q
            dmax += 1
        # dmax = largest total degree with q^d <= cap
        for ea in range(0, dmax + 1):
            for eb in range(0, dmax + 1 - ea):
                if ea and eb:
                    continue
                for em in range(0, dmax + 1 - ea - eb):
                    d = ea + eb + em
                    if d == 0:
                        continue
                    w = (h[4 * ea + em] * h[4 * eb + em]
                         * qs ** (4 * ea + 4 * eb + 2 * em) * corr)
                    rows.append((q ** d, w))
        rows.sort(key=lambda t: t[0])
        opts.append(rows)
    return opts


def mtilde_series(sigma: float, y: float, cut: SeriesCutoffs) -> complex:
    """The literal triple Dirichlet series, truncated by ideal norm.

    Enumerates odd ideal triples (a, b, m) with gcd(a, b) = 1 and
    N(a b m) <= ideal_norm_cap by depth-first search over prime ideals;
    the ramified part is the squared partial sum over r <= r_max.
    cut.trunc_report receives a truncation estimate: the banked top-half
    terms extrapolated geometrically, plus the ramified partial-sum gap.
    """
    cap = cut.ideal_norm_cap
    u = 1j * y
    hmax = max(cut.r_max, 4 * max(1, int(math.log(max(cap, 3)) / math.log(3))) + 4)
    h = _h_table(hmax, u)
    if cap >= 5:
        nn, _, _, _ = _sieve.prime_ideal_arrays(cap)
        qn = nn[nn > 2]
    else:
        qn = np.zeros(0, dtype=np.int64)
    opts = _mtilde_options(sigma, h, qn, cap)
    qlist = qn.tolist()
    n = len(qlist)

    total = complex(1.0)  # the (1,1,1) triple
    bank = 0.0
    half = cap / 2.0

    def rec(i0: int, budget: int, w: complex, nrm: int):
        nonlocal total, bank
        for i in range(i0, n):
            q = qlist[i]
            if q > budget:
                break
            for dn, wo in opts[i]:
                if dn > budget:
                    break
                w2 = w * wo
                if w2 == 0.0:
                    continue
                total += w2
                nrm2 = nrm * dn
                if nrm2 > half:
                    bank += abs(w2)
                rec(i + 1, budget // dn, w2, nrm2)

    rec(0, cap, complex(1.0), 1)

    rpart = complex(np.sum(h[:cut.r_max + 1]
                           * (2.0 ** -sigma) ** np.arange(cut.r_max + 1)))
    pref = rpart * rpart
    closed = prefactor(sigma, y)
    geo = 1.25 / (2.0 ** (2.0 * sigma - 1.0) - 1.0)
    cut.trunc_report = abs(pref) * bank * geo + abs(total) * abs(pref - closed)
    return pref * total

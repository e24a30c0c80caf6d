"""Hot loops, compiled with numba.

Integer kernels for the quartic symbol (the same algorithm as
quartic.symbol, specialized to int64 coordinates) and for character
table walks, plus the Dirichlet-series kernels: an in-place Euler
product sweep over int16 coefficient arrays and compensated scan /
large-prime accumulation passes.

Coordinate kernels assume |re|, |im| well below 2^31 so that all
intermediate products stay inside int64; callers enforce this.  All
loops run in a fixed order so results are bit-identical regardless of
how work is distributed across threads.
"""

import numba as nb
import numpy as np


# ---------------------------------------------------------------------------
# quartic symbol on raw int64 coordinates


@nb.njit(nb.types.UniTuple(nb.int64, 2)(nb.int64, nb.int64, nb.int64, nb.int64, nb.int64),
         cache=True, nogil=True, inline="always")
def _mod_gi(are, aim, bre, bim, bn):
    """Remainder of a mod b in Z[i]; bn = N(b).  Ties round toward -inf."""
    tre = are * bre + aim * bim
    tim = aim * bre - are * bim
    d = 2 * bn
    q1, r1 = divmod(2 * tre + bn, d)
    if r1 == 0:
        q1 -= 1
    q2, r2 = divmod(2 * tim + bn, d)
    if r2 == 0:
        q2 -= 1
    rre = are - (q1 * bre - q2 * bim)
    rim = aim - (q1 * bim + q2 * bre)
    return rre, rim


@nb.njit(nb.int8(nb.int64, nb.int64, nb.int64, nb.int64), cache=True, nogil=True)
def _sym1(mre, mim, nre, nim):
    """(m/n)_4 for odd nonzero n: exponent k of i^k, or -1 for zero."""
    for _ in range(4):
        if ((nre & 3) == 1 and (nim & 3) == 0) or ((nre & 3) == 3 and (nim & 3) == 2):
            break
        t = nre
        nre = nim
        nim = -t
    nn = nre * nre + nim * nim
    if nn == 1:
        return 0
    acc = 0
    mre, mim = _mod_gi(mre, mim, nre, nim, nn)
    while True:
        if mre == 0 and mim == 0:
            return -1
        t = 0
        while ((mre + mim) & 1) == 0:
            h = (mre + mim) >> 1
            mim = (mim - mre) >> 1
            mre = h
            t += 1
        s = 0
        while not (((mre & 3) == 1 and (mim & 3) == 0) or ((mre & 3) == 3 and (mim & 3) == 2)):
            h = mre
            mre = mim
            mim = -h
            s += 1
        acc += s * (((1 - nre) >> 1) & 3) + t * (((nre - nim - 1 - nim * nim) >> 2) & 3)
        mn = mre * mre + mim * mim
        if mn == 1:
            return acc & 3
        if (((nn - 1) >> 2) & 1) == 1 and (((mn - 1) >> 2) & 1) == 1:
            acc += 2
        rre, rim = _mod_gi(nre, nim, mre, mim, mn)
        nre, nim, nn = mre, mim, mn
        mre, mim = rre, rim


@nb.njit(nb.void(nb.int64[:], nb.int64[:], nb.int64[:], nb.int64[:], nb.int8[:]),
         cache=True, nogil=True)
def symbol_batch(mre, mim, nre, nim, out):
    for j in range(mre.size):
        out[j] = _sym1(mre[j], mim[j], nre[j], nim[j])


@nb.njit(nb.void(nb.int64[:], nb.int64[:], nb.int64, nb.int64, nb.int8[:]),
         cache=True, nogil=True)
def symbol_batch_fixed_n(mre, mim, nre, nim, out):
    for j in range(mre.size):
        out[j] = _sym1(mre[j], mim[j], nre, nim)


@nb.njit(nb.int8(nb.int64, nb.int64, nb.int64, nb.int64, nb.int64), cache=True, nogil=True)
def _oracle1(are, aim, pre, pim, pn):
    """(a/pi)_4 by exponentiation to (N(pi)-1)/4 modulo the prime pi."""
    are, aim = _mod_gi(are, aim, pre, pim, pn)
    if are == 0 and aim == 0:
        return -1
    e = (pn - 1) >> 2
    wre, wim = 1, 0
    bre, bim = are, aim
    while e:
        if e & 1:
            t = wre * bre - wim * bim
            wim = wre * bim + wim * bre
            wre = t
            wre, wim = _mod_gi(wre, wim, pre, pim, pn)
        e >>= 1
        if e:
            t = bre * bre - bim * bim
            bim = 2 * bre * bim
            bre = t
            bre, bim = _mod_gi(bre, bim, pre, pim, pn)
    for k in range(4):
        if k == 0:
            ure, uim = 1, 0
        elif k == 1:
            ure, uim = 0, 1
        elif k == 2:
            ure, uim = -1, 0
        else:
            ure, uim = 0, -1
        dre, dim = _mod_gi(wre - ure, wim - uim, pre, pim, pn)
        if dre == 0 and dim == 0:
            return k
    return -2  # modulus was not prime


@nb.njit(nb.void(nb.int64[:], nb.int64[:], nb.int64, nb.int64, nb.int64, nb.int8[:]),
         cache=True, nogil=True)
def oracle_batch_fixed_p(are, aim, pre, pim, pn, out):
    for j in range(are.size):
        out[j] = _oracle1(are[j], aim[j], pre, pim, pn)


# ---------------------------------------------------------------------------
# character tables: walk the cyclic residue group once, recording i-exponents


@nb.njit(nb.void(nb.int64, nb.int64, nb.int64, nb.int8[:]), cache=True, nogil=True)
def walk_deg1(p, g, eps, table):
    """table[x] = quartic exponent of residue x in F_p, walking powers of g."""
    x = 1
    for j in range(p - 1):
        table[x] = (eps * j) & 3
        x = (x * g) % p


@nb.njit(nb.void(nb.int64, nb.int64, nb.int64, nb.int64, nb.int8[:]), cache=True, nogil=True)
def walk_deg2(p, gre, gim, eps, table):
    """table[u*p + v] = quartic exponent of u + v*i in F_{p^2} = F_p[i]."""
    xre = 1
    xim = 0
    n = p * p - 1
    for j in range(n):
        table[xre * p + xim] = (eps * j) & 3
        tre = (xre * gre - xim * gim) % p
        xim = (xre * gim + xim * gre) % p
        xre = tre


# ---------------------------------------------------------------------------
# Dirichlet coefficients: in-place Euler sweep over integer arrays


@nb.njit(nb.void(nb.int16[:], nb.int16[:], nb.int64[:], nb.int8[:], nb.int64),
         cache=True, nogil=True)
def euler_sweep(R, I, qn, qg, limit):
    """Multiply (R + iI) by the local factor 1/(1 - i^g N(q)^{-s}) per prime.

    Ascending-index sweep: A[m*q] += i^g * A[m] picks up prime powers
    recursively.  Entries stay exact integers; values are bounded by the
    ideal-count function, far inside int16.
    """
    for idx in range(qn.size):
        q = qn[idx]
        g = qg[idx]
        top = limit // q
        if g == 0:
            for m in range(1, top + 1):
                mq = m * q
                R[mq] += R[m]
                I[mq] += I[m]
        elif g == 1:
            for m in range(1, top + 1):
                mq = m * q
                R[mq] -= I[m]
                I[mq] += R[m]
        elif g == 2:
            for m in range(1, top + 1):
                mq = m * q
                R[mq] -= R[m]
                I[mq] -= I[m]
        else:
            for m in range(1, top + 1):
                mq = m * q
                R[mq] += I[m]
                I[mq] -= R[m]


@nb.njit(nb.types.UniTuple(nb.float64, 4)(nb.float64, nb.float64, nb.float64, nb.float64,
                                          nb.float64, nb.float64),
         cache=True, nogil=True, inline="always")
def _neu2(sr, cr, si, ci, xr, xi):
    """One Neumaier-compensated step on a (re, im) accumulator pair."""
    t = sr + xr
    if abs(sr) >= abs(xr):
        cr += (sr - t) + xr
    else:
        cr += (xr - t) + sr
    sr = t
    t = si + xi
    if abs(si) >= abs(xi):
        ci += (si - t) + xi
    else:
        ci += (xi - t) + si
    si = t
    return sr, cr, si, ci


@nb.njit(nb.types.UniTuple(nb.float64, 2)(nb.int16[:], nb.int16[:], nb.float64[:], nb.float64[:]),
         cache=True, nogil=True)
def scan_sigma1(R, I, e_hi, e_lo):
    """Sum A[n] * exp(-n/X) / n over the array; exp split as hi*lo table product."""
    sr = cr = si = ci = 0.0
    for n in range(1, R.size):
        r = R[n]
        i = I[n]
        if r == 0 and i == 0:
            continue
        w = e_hi[n >> 12] * e_lo[n & 4095] / n
        sr, cr, si, ci = _neu2(sr, cr, si, ci, r * w, i * w)
    return sr + cr, si + ci


@nb.njit(nb.types.UniTuple(nb.float64, 2)(nb.int16[:], nb.int16[:], nb.float64[:], nb.float64[:],
                                          nb.float64),
         cache=True, nogil=True)
def scan_general(R, I, e_hi, e_lo, sigma):
    sr = cr = si = ci = 0.0
    for n in range(1, R.size):
        r = R[n]
        i = I[n]
        if r == 0 and i == 0:
            continue
        w = e_hi[n >> 12] * e_lo[n & 4095] * n ** (-sigma)
        sr, cr, si, ci = _neu2(sr, cr, si, ci, r * w, i * w)
    return sr + cr, si + ci


@nb.njit(nb.types.UniTuple(nb.float64, 2)(nb.int16[:], nb.int16[:], nb.int64[:], nb.int8[:],
                                          nb.float64, nb.float64, nb.float64[:], nb.int64),
         cache=True, nogil=True)
def large_primes_sum(R, I, qn, qg, X, sigma, invm, limit):
    """Contributions of primes with N(q)^2 > limit, accumulated read-side.

    Such a prime divides any index n <= limit at most once, so its whole
    contribution is i^g N(q)^{-sigma} * sum_m A[m] exp(-m q/X) m^{-sigma},
    with exp(-mq/X) tracked by a geometric recurrence.  invm[m] holds
    m^{-sigma}.
    """
    sr = cr = si = ci = 0.0
    for idx in range(qn.size):
        q = qn[idx]
        g = qg[idx]
        top = limit // q
        r = np.exp(-q / X)
        qs = q ** (-sigma)
        ar = 0.0
        ai = 0.0
        wr = 1.0
        for m in range(1, top + 1):
            wr *= r
            rm = R[m]
            im = I[m]
            if rm == 0 and im == 0:
                continue
            w = wr * invm[m]
            ar += rm * w
            ai += im * w
        if g == 0:
            xr, xi = ar * qs, ai * qs
        elif g == 1:
            xr, xi = -ai * qs, ar * qs
        elif g == 2:
            xr, xi = -ar * qs, -ai * qs
        else:
            xr, xi = ai * qs, -ar * qs
        sr, cr, si, ci = _neu2(sr, cr, si, ci, xr, xi)
    return sr + cr, si + ci

"""Shared numpy sieve infrastructure.

Rational prime sieves plus the two bulk enumerations everything else
leans on: prime ideals of Z[i] by norm, and one canonical generator per
nonzero ideal by norm.  Grow-only module caches keep repeated calls
cheap; callers receive views and must not mutate them.
"""

from __future__ import annotations

import threading

import numpy as np

_CACHE: dict = {"mask": None, "spf": None, "pil": None, "fq": None}
# growth is compute-then-publish; the lock only prevents duplicated work
_LOCK = threading.RLock()


def prime_mask(limit: int) -> np.ndarray:
    """Boolean array m of length limit+1 with m[n] = n is prime."""
    limit = int(limit)
    cached = _CACHE["mask"]
    if cached is None or len(cached) <= limit:
        with _LOCK:
            cached = _CACHE["mask"]
            if cached is None or len(cached) <= limit:
                n = max(limit, 1 << 10)
                m = np.ones(n + 1, dtype=bool)
                m[:2] = False
                for p in range(2, int(n ** 0.5) + 1):
                    if m[p]:
                        m[p * p :: p] = False
                _CACHE["mask"] = m
                cached = m
    return cached[: limit + 1]


def smallest_prime_factor(limit: int) -> np.ndarray:
    """int32 array s with s[n] = smallest prime factor of n (s[0]=s[1]=0)."""
    limit = int(limit)
    cached = _CACHE["spf"]
    if cached is None or len(cached) <= limit:
        with _LOCK:
            cached = _CACHE["spf"]
            if cached is None or len(cached) <= limit:
                n = max(limit, 1 << 10)
                s = np.zeros(n + 1, dtype=np.int32)
                s[2::2] = 2
                for p in range(3, int(n ** 0.5) + 1, 2):
                    if s[p] == 0:
                        sl = s[p * p :: 2 * p]
                        sl[sl == 0] = p
                odd = np.arange(3, n + 1, 2, dtype=np.int32)
                view = s[3::2]
                mask = view == 0
                view[mask] = odd[mask]  # remaining odd entries are prime
                _CACHE["spf"] = s
                cached = s
    return cached[: limit + 1]


def rational_primes(limit: int) -> np.ndarray:
    return np.nonzero(prime_mask(limit))[0].astype(np.int64)


def prime_ideal_arrays(X: int):
    """All prime ideals of Z[i] with norm <= X.

    Returns (norm, re, im, degree): int64/int64/int64/int8 arrays sorted
    by (norm, re, im).  Generators are the canonical first-quadrant
    associates (re >= 1, im >= 0): the ramified ideal appears as (1, 1),
    each split rational prime p = a^2 + b^2 contributes both (a, b) and
    (b, a), and an inert prime p appears as (p, 0) with norm p^2.
    """
    X = int(X)
    cached = _CACHE["pil"]
    if cached is None or cached[0] < X:
        with _LOCK:
            cached = _CACHE["pil"]
            if cached is None or cached[0] < X:
                cached = _build_pil(X)
                _CACHE["pil"] = cached
    _, norm, re, im, degree = cached
    cut = np.searchsorted(norm, X, side="right")
    return norm[:cut], re[:cut], im[:cut], degree[:cut]


def _build_pil(X: int):
    mask = prime_mask(X)
    norms_parts = []
    re_parts = []
    im_parts = []
    if X >= 2:
        norms_parts.append(np.array([2], dtype=np.int64))
        re_parts.append(np.array([1], dtype=np.int64))
        im_parts.append(np.array([1], dtype=np.int64))
    # split primes: ordered pairs (a, b), a,b >= 1, a^2+b^2 = p prime
    bmax = int((X - 1) ** 0.5) if X > 1 else 0
    for bb in range(1, bmax + 1):
        amax = int((X - bb * bb) ** 0.5)
        if amax < 1:
            continue
        a = np.arange(1, amax + 1, dtype=np.int64)
        n = a * a + bb * bb
        keep = mask[n] & (n != 2)
        if keep.any():
            norms_parts.append(n[keep])
            re_parts.append(a[keep])
            im_parts.append(np.full(int(keep.sum()), bb, dtype=np.int64))
    # inert primes p = 3 mod 4, norm p^2 <= X
    pmax = int(X ** 0.5)
    ps = rational_primes(pmax)
    ps = ps[ps % 4 == 3]
    if len(ps):
        norms_parts.append(ps * ps)
        re_parts.append(ps)
        im_parts.append(np.zeros(len(ps), dtype=np.int64))
    if norms_parts:
        norm = np.concatenate(norms_parts)
        re = np.concatenate(re_parts)
        im = np.concatenate(im_parts)
    else:
        norm = np.zeros(0, dtype=np.int64)
        re = np.zeros(0, dtype=np.int64)
        im = np.zeros(0, dtype=np.int64)
    order = np.lexsort((im, re, norm))
    norm, re, im = norm[order], re[order], im[order]
    degree = np.where(im == 0, np.int8(2), np.int8(1)).astype(np.int8)
    return (X, norm, re, im, degree)


def first_quadrant_arrays(X: int):
    """One canonical generator (re >= 1, im >= 0) per ideal of norm <= X.

    Returns (norm, re, im) int64 arrays sorted by (norm, re, im).
    """
    X = int(X)
    cached = _CACHE["fq"]
    if cached is None or cached[0] < X:
        with _LOCK:
            cached = _CACHE["fq"]
            if cached is None or cached[0] < X:
                norms_parts = []
                re_parts = []
                im_parts = []
                bmax = int(X ** 0.5)
                for bb in range(0, bmax + 1):
                    amax = int((X - bb * bb) ** 0.5)
                    if amax < 1:
                        continue
                    a = np.arange(1, amax + 1, dtype=np.int64)
                    norms_parts.append(a * a + bb * bb)
                    re_parts.append(a)
                    im_parts.append(np.full(amax, bb, dtype=np.int64))
                norm = np.concatenate(norms_parts)
                re = np.concatenate(re_parts)
                im = np.concatenate(im_parts)
                order = np.lexsort((im, re, norm))
                cached = (X, norm[order], re[order], im[order])
                _CACHE["fq"] = cached
    _, norm, re, im = cached
    cut = np.searchsorted(norm, X, side="right")
    return norm[:cut], re[:cut], im[:cut]


def ideal_norm_counts(X: int) -> np.ndarray:
    """r[n] = number of ideals of norm n for n <= X, via r(n) = sum_{d|n} chi_4(d).

    Independent of the lattice enumeration above; used as a counting oracle.
    """
    X = int(X)
    r = np.zeros(X + 1, dtype=np.int64)
    for d in range(1, X + 1, 4):
        r[d::d] += 1
    for d in range(3, X + 1, 4):
        r[d::d] -= 1
    r[0] = 0
    return r

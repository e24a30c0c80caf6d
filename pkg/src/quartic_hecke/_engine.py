"""Per-character evaluation of the smoothed Dirichlet series.

For one twist c the pipeline is: factor c, build residue tables that
read off the character exponent at any prime generator, assemble the
exponent for every prime ideal of the sieve in a few vectorized passes,
then run the integer Euler-product sweep and the compensated scan
kernels.  Everything per character is serial and fixed-order, so a
value for a given c never depends on what other threads are doing.
"""

from math import ceil, exp, isqrt, log

import numpy as np

from . import _kernels, _sieve
from .gaussint import GaussInt, factor, norm

EPS_TAIL = 1e-10

# character-exponent tables mark "prime divides c" with this sentinel;
# a sum of genuine exponents over the prime divisors of c stays below it
_DIVIDES = 64


def _primitive_root(p: int) -> int:
    """Smallest primitive root of F_p."""
    from .gaussint import _factor_int

    provers = [(p - 1) // r for r, _ in _factor_int(p - 1)]
    g = 2
    while True:
        if all(pow(g, e, p) != 1 for e in provers):
            return g
        g += 1


def _fp2_pow(base, e, p):
    """base^e in F_p[i], base an (re, im) pair."""
    xre, xim = 1, 0
    bre, bim = base
    while e:
        if e & 1:
            xre, xim = (xre * bre - xim * bim) % p, (xre * bim + xim * bre) % p
        e >>= 1
        if e:
            bre, bim = (bre * bre - bim * bim) % p, (2 * bre * bim) % p
    return xre, xim


def _fp2_generator(p: int):
    """A generator of the cyclic group F_{p^2}^* for p = 3 mod 4."""
    from .gaussint import _factor_int

    n = p * p - 1
    provers = [n // r for r, _ in _factor_int(n)]
    for bre in range(1, p):
        for bim in range(1, p):
            if all(_fp2_pow((bre, bim), e, p) != (1, 0) for e in provers):
                return bre, bim
    raise AssertionError("F_{p^2} has a generator; search cannot fail")


class CharTables:
    """Lookup tables for the character attached to one twist c.

    One table per prime divisor of c.  Degree-1 divisors of norm p embed
    Z[i]/q = F_p via i -> s; degree-2 divisors index F_p[i] residues as
    u*p + v.  Table entries are i-exponents in 0..3, with _DIVIDES
    marking residues the prime divides.
    """

    def __init__(self, c: GaussInt):
        self.c = c
        self.deg1 = []  # (p, s, table)
        self.deg2 = []  # (p, table)
        for rec, _ in factor(c).factors:
            if rec.degree == 1:
                p = rec.norm
                a, b = rec.gen.re, rec.gen.im
                s = (-a * pow(b, p - 2, p)) % p
                g = _primitive_root(p)
                g4 = pow(g, (p - 1) // 4, p)
                if g4 == s:
                    eps = 1
                elif g4 == p - s:
                    eps = 3
                else:
                    raise AssertionError("g^((p-1)/4) must be a square root of -1")
                table = np.full(p, _DIVIDES, dtype=np.int8)
                _kernels.walk_deg1(p, g, eps, table)
                self.deg1.append((p, s, table))
            else:
                p = isqrt(rec.norm)
                gre, gim = _fp2_generator(p)
                g4 = _fp2_pow((gre, gim), (p * p - 1) // 4, p)
                if g4 == (0, 1):
                    eps = 1
                elif g4 == (0, p - 1):
                    eps = 3
                else:
                    raise AssertionError("g^((p^2-1)/4) must be a square root of -1")
                table = np.full(p * p, _DIVIDES, dtype=np.int8)
                _kernels.walk_deg2(p, gre, gim, eps, table)
                self.deg2.append((p, table))

    def exponent_of(self, z: GaussInt) -> int:
        """Character exponent at a single element; -1 when gcd(z, c) != 1."""
        ge = 0
        for p, s, table in self.deg1:
            e = int(table[(z.re + z.im * s) % p])
            if e >= _DIVIDES:
                return -1
            ge += e
        for p, table in self.deg2:
            e = int(table[(z.re % p) * p + (z.im % p)])
            if e >= _DIVIDES:
                return -1
            ge += e
        return ge & 3

    def exponents_at(self, rr: np.ndarray, ii: np.ndarray) -> np.ndarray:
        """Vectorized exponent per generator; -1 rows share a factor with c."""
        ge = np.zeros(rr.size, dtype=np.int16)
        for p, s, table in self.deg1:
            ge += table[(rr + ii * s) % p]
        for p, table in self.deg2:
            ge += table[(rr % p) * p + (ii % p)]
        out = (ge & 3).astype(np.int8)
        out[ge >= _DIVIDES] = -1
        return out


def summation_limit(sigma: float, X: float) -> int:
    """Smallest sweep length whose discarded tail is provably < EPS_TAIL.

    Partial summation with the ideal count R(t) <= 4t bounds the tail of
    sum r(n) n^{-sigma} e^{-n/X} beyond T by 4 (T + X) T^{-sigma} e^{-T/X}
    (boundary term plus the integral).  Start at T = X ln(1/eps) and grow
    until the bound clears; the exponential guarantees a few steps suffice.
    """
    T = X * log(1.0 / EPS_TAIL)
    while 4.0 * (T + X) * T ** (-sigma) * exp(-T / X) >= EPS_TAIL:
        T *= 1.05
    return int(ceil(T))


def l_sum(c: GaussInt, sigma: float, X: float) -> complex:
    """The smoothed series sum chi_c(a) N(a)^{-sigma} exp(-N(a)/X) over ideals."""
    limit = summation_limit(sigma, X)
    nn, rr, ii, _ = _sieve.prime_ideal_arrays(limit)
    tables = CharTables(c)
    g = tables.exponents_at(rr, ii)
    live = g >= 0
    qn = np.ascontiguousarray(nn[live])
    qg = np.ascontiguousarray(g[live])
    split = int(np.searchsorted(qn, isqrt(limit), side="right"))

    R = np.zeros(limit + 1, dtype=np.int16)
    I = np.zeros(limit + 1, dtype=np.int16)
    R[1] = 1
    _kernels.euler_sweep(R, I, qn[:split], qg[:split], limit)

    e_hi = np.exp(-(np.arange((limit >> 12) + 1, dtype=np.float64) * 4096.0) / X)
    e_lo = np.exp(-np.arange(4096, dtype=np.float64) / X)
    if sigma == 1.0:
        sr, si = _kernels.scan_sigma1(R, I, e_hi, e_lo)
    else:
        sr, si = _kernels.scan_general(R, I, e_hi, e_lo, sigma)

    mtop = limit // (isqrt(limit) + 1) + 1
    m = np.arange(mtop + 1, dtype=np.float64)
    m[0] = 1.0
    invm = m ** (-sigma)
    lr, li = _kernels.large_primes_sum(R, I, qn[split:], qg[split:], float(X), sigma,
                                       invm, limit)
    return complex(sr + lr, si + li)

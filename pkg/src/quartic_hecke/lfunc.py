"""Smoothed Hecke L-values over the twist family.

The statistic here is script-L(sigma) = 2 ln|L(sigma, chi_c)|, computed
from a smoothed Dirichlet series.  The module also carries the family
averages: the empirical characteristic function, the weighted and sharp
family counts, and the density constant they converge to.
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.special import polygamma

from . import _engine, _kernels, _sieve
from .gaussint import FamilyElement, enumerate_C

# relative truncation of exponentially weighted family sums: c beyond
# N(c) = Y ln(1/this) contribute less than this fraction of the total
FAMILY_TAIL_EPS = 1e-4


@dataclass
class LValueParams:
    """Evaluation parameters for one L-value.

    cutoff_X = None picks max(norm(c), 10^4) per character, the default
    smoothing scale; an explicit value must dominate norm(c).
    """

    sigma: float
    cutoff_X: float | None = None
    zero_threshold: float = 1e-12

    def __post_init__(self):
        if not 0.5 < self.sigma <= 4.0:
            raise ValueError("sigma must lie in (1/2, 4]")
        if self.cutoff_X is not None and self.cutoff_X <= 0:
            raise ValueError("cutoff_X must be positive")
        if self.zero_threshold <= 0:
            raise ValueError("zero_threshold must be positive")

    def cutoff_for(self, c: FamilyElement) -> float:
        if self.cutoff_X is None:
            return float(max(c.norm, 10_000))
        if self.cutoff_X < c.norm:
            raise ValueError("cutoff_X below norm(c): smoothing would truncate the conductor scale")
        return float(self.cutoff_X)


@dataclass
class EmpiricalSample:
    """One family member's statistic: script_l is NaN when excluded."""

    c: FamilyElement
    script_l: float
    weight: float
    excluded: bool


def l_value(c: FamilyElement, p: LValueParams) -> complex:
    """L(sigma, chi_c) as the exp(-N/X)-smoothed coefficient sum."""
    return _engine.l_sum(c.c, p.sigma, p.cutoff_for(c))


def script_l(c: FamilyElement, p: LValueParams) -> EmpiricalSample:
    """The sample 2 ln|L(sigma, chi_c)| = ln|L|^2, flagged when |L|^2 is a zero."""
    v = l_value(c, p)
    l2 = abs(v) ** 2
    if l2 < p.zero_threshold:
        return EmpiricalSample(c, math.nan, 1.0, True)
    return EmpiricalSample(c, math.log(l2), 1.0, False)


def direct_l_sigma2(c: FamilyElement, limit: int) -> complex:
    """Unsmoothed partial sum of the series at sigma = 2, up to norm limit.

    Evaluates the character at every ideal generator by the fast symbol,
    with no sieving and no smoothing: an independent oracle for l_value.
    """
    nn, rr, ii = _sieve.first_quadrant_arrays(int(limit))
    ks = np.empty(nn.size, dtype=np.int8)
    _kernels.symbol_batch_fixed_n(rr, ii, c.c.re, c.c.im, ks)
    w = 1.0 / (nn.astype(np.float64) * nn.astype(np.float64))
    re = np.zeros(nn.size)
    im = np.zeros(nn.size)
    re[ks == 0] = 1.0
    im[ks == 1] = 1.0
    re[ks == 2] = -1.0
    im[ks == 3] = -1.0
    return complex(float(np.sum(re * w)), float(np.sum(im * w)))


class FamilyLTable:
    """script_l over every family member up to a growing norm bound.

    Values depend only on (sigma, cutoff rule), never on the averaging
    scale Y, so one table serves every Y below its bound.  extend() may
    fan out over threads: each character is evaluated serially inside
    one task, so values are identical whatever the thread count.
    """

    def __init__(self, params: LValueParams):
        self.params = params
        self.values: dict = {}  # (re, im) -> EmpiricalSample with weight 1
        self.bound = 0
        self._lock = threading.Lock()

    def extend(self, bound: int, threads: int = 1) -> None:
        bound = int(bound)
        if bound <= self.bound:
            return
        todo = [fe for fe in enumerate_C(bound)
                if (fe.c.re, fe.c.im) not in self.values]
        if todo:
            # warm the shared caches once so worker threads only read
            xmax = max(self.params.cutoff_for(fe) for fe in todo)
            _sieve.prime_ideal_arrays(_engine.summation_limit(self.params.sigma, xmax))
            if threads <= 1:
                results = [self._compute(fe) for fe in todo]
            else:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    results = list(pool.map(self._compute, todo))
            for fe, sample in zip(todo, results):
                self.values[(fe.c.re, fe.c.im)] = sample
        self.bound = bound

    def _compute(self, fe: FamilyElement) -> EmpiricalSample:
        return script_l(fe, self.params)

    def samples(self, Y: float, tail_eps: float = FAMILY_TAIL_EPS, threads: int = 1):
        """Weighted samples for averaging scale Y, in family order."""
        bound = max(226, int(Y * math.log(1.0 / tail_eps)))
        self.extend(bound, threads)
        out = []
        for fe in enumerate_C(bound):
            base = self.values[(fe.c.re, fe.c.im)]
            out.append(EmpiricalSample(fe, base.script_l,
                                       math.exp(-fe.norm / Y), base.excluded))
        return out


_DEFAULT_TABLES: dict = {}
_DEFAULT_TABLES_LOCK = threading.Lock()


def _default_table(p: LValueParams) -> FamilyLTable:
    key = (p.sigma, p.cutoff_X, p.zero_threshold)
    with _DEFAULT_TABLES_LOCK:
        table = _DEFAULT_TABLES.get(key)
        if table is None:
            table = _DEFAULT_TABLES[key] = FamilyLTable(p)
        return table


def empirical_char_fn(sigma: float, y: float, Y: float, p: LValueParams = None,
                      table: FamilyLTable = None, threads: int = 1) -> complex:
    """The family-averaged exp(iy script_l), exponentially weighted at scale Y.

    Numerator runs over non-excluded c, denominator over all of them;
    both use exactly rounded summation in family order, so the value is
    independent of the thread count used to fill the table.
    """
    if Y < 225:
        raise ValueError("family is empty below Y = 225")
    if p is None:
        p = LValueParams(sigma=sigma)
    elif p.sigma != sigma:
        raise ValueError("sigma argument disagrees with params.sigma")
    if table is None:
        table = _default_table(p)
    samples = table.samples(Y, threads=threads)
    num_re = []
    num_im = []
    den = []
    for s in samples:
        den.append(s.weight)
        if not s.excluded:
            num_re.append(s.weight * math.cos(y * s.script_l))
            num_im.append(s.weight * math.sin(y * s.script_l))
    d = math.fsum(den)
    if d == 0.0:
        raise ValueError("family is empty at this Y")
    return complex(math.fsum(num_re) / d, math.fsum(num_im) / d)


def s_count(Y) -> int:
    """Sharp count of family members with norm at most Y."""
    return len(enumerate_C(int(Y)))


def s_star(Y: float, tail_eps: float = FAMILY_TAIL_EPS) -> float:
    """Weighted family size: sum of exp(-N(c)/Y) over the family."""
    if Y < 1:
        raise ValueError("Y must be at least 1")
    bound = int(Y * math.log(1.0 / tail_eps))
    return math.fsum(math.exp(-fe.norm / Y) for fe in enumerate_C(bound))


def unit_orbit_class_count() -> int:
    """Order of the residue classes mod 16 that index the family: the
    odd residues of Z[i]/16 modulo multiplication by {1, i, -1, -i}."""
    odd = [(a, b) for a in range(16) for b in range(16) if (a + b) % 2 == 1]
    if len(odd) != 128:
        raise AssertionError("odd residue count mod 16 must be 128")
    seen = set()
    orbits = 0
    for a, b in odd:
        if (a, b) in seen:
            continue
        orbits += 1
        for ur, ui in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            seen.add(((a * ur - b * ui) % 16, (a * ui + b * ur) % 16))
    if orbits * 4 != len(odd):
        raise AssertionError("every unit orbit on odd residues must have size 4")
    return orbits


def zeta_k2() -> float:
    """zeta_K(2) = zeta(2) * L(2, chi_-4), both factors in closed form."""
    catalan = (polygamma(1, 0.25) - polygamma(1, 0.75)) / 16.0
    return float(math.pi ** 2 / 6.0 * catalan)


def residue_zeta_k() -> float:
    """Residue of zeta_K at s = 1: pi/4 for Q(i)."""
    return math.pi / 4.0


def density_constant() -> float:
    """Leading constant in s_count(Y) ~ const * Y.

    (2/3) * res zeta_K / (orbit-class count * zeta_K(2)): the 2/3 from
    the square-free correction at the ramified prime, pi/4 the residue,
    32 residue classes, and the square-free density 1/zeta_K(2).
    """
    return (2.0 / 3.0) * residue_zeta_k() / (unit_orbit_class_count() * zeta_k2())

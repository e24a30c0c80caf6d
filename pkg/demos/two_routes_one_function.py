"""
Two routes to the characteristic function
=========================================

The model characteristic function phi_sigma(y) has an Euler-product
form and a literal series form built from completely different code.
Watching them agree to many digits, with both truncation reports in
view, is the core consistency check of the analytic half.
"""

import numpy as np

from quartic_hecke import CharFnParams, SeriesCutoffs
from quartic_hecke import h_coeff, mtilde_series, phi_sigma, prefactor

# ----------------------------------------------------------------------
# product route vs series route at sigma = 1
print("sigma = 1.0, product cutoff P = 1e6, series cap 2e5:")
for y in (0.5, 1.0, 2.0):
    p = CharFnParams(sigma=1.0, prime_cutoff_P=10**6)
    v = phi_sigma(1.0, y, p)
    cut = SeriesCutoffs(r_max=60, ideal_norm_cap=2 * 10**5)
    m = mtilde_series(1.0, y, cut)
    print("  y = %.1f   phi = %+.10f%+.10fi   |phi - mtilde| = %.2e   (reports %.1e + %.1e)"
          % (y, v.real, v.imag, abs(v - m), p.tail_report, cut.trunc_report))

# ----------------------------------------------------------------------
# both routes collapse to exactly 1 at y = 0
p = CharFnParams(sigma=1.0, prime_cutoff_P=10**4)
cut = SeriesCutoffs(r_max=40, ideal_norm_cap=10**3)
print()
print("phi(0) = %s   mtilde(0) = %s" % (phi_sigma(1.0, 0.0, p), mtilde_series(1.0, 0.0, cut)))

# ----------------------------------------------------------------------
# the coefficient generating identity: sum_r H_r(u) t^r = (1-t)^(-u).
# With u = iy and t = 2^(-sigma) its square is the ramified prefactor.
print()
sigma, y = 0.75, 1.3
t = 2.0**-sigma
s = sum(h_coeff(r, 1j * y) * t**r for r in range(61))
print("partial sum squared  %+.12f%+.12fi" % ((s * s).real, (s * s).imag))
closed = prefactor(sigma, y)
print("closed form          %+.12f%+.12fi" % (closed.real, closed.imag))
print("difference           %.2e" % abs(s * s - closed))

# ----------------------------------------------------------------------
# pushing the series cap up walks the gap down
print()
p = CharFnParams(sigma=1.0, prime_cutoff_P=10**6)
v = phi_sigma(1.0, 1.0, p)
for cap in (10**3, 10**4, 10**5):
    cut = SeriesCutoffs(r_max=60, ideal_norm_cap=cap)
    m = mtilde_series(1.0, 1.0, cut)
    print("  cap %6d   |phi - mtilde| = %.3e" % (cap, abs(v - m)))

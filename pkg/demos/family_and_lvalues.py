"""
The quartic family and its smoothed L-values
============================================

Walks the family of twisting moduli c (squarefree, c = 1 mod 16),
evaluates the smoothed L-value at a few points on the critical strip's
right half, and prints the statistic that the whole artifact studies.
"""

import math

from quartic_hecke import FamilyElement, GaussInt, LValueParams, enumerate_C
from quartic_hecke import chi_c, l_value, script_l

# ----------------------------------------------------------------------
# the first dozen family members by norm
members = enumerate_C(2000)
print("family members with norm <= 2000:")
for fe in members[:12]:
    print("  c = %-8s  norm %d" % (fe.c, fe.norm))
print("  ... %d total" % len(members))

# ----------------------------------------------------------------------
# the character kills both units for every member; spot-check one
fe = members[0]
print()
print("chi_c(i) = %s and chi_c(1+i) = %s at c = %s"
      % (chi_c(fe, GaussInt(0, 1)), chi_c(fe, GaussInt(1, 1)), fe.c))

# ----------------------------------------------------------------------
# L(sigma, chi_c) by the smoothed Dirichlet sum, then the statistic
# script-L = 2 log |L|.  Conjugate c give identical values.
print()
params = LValueParams(sigma=1.0)
for fe in members[:6]:
    v = l_value(fe, params)
    s = script_l(fe, params)
    print("c = %-8s  L(1) = %+.12f %+.12fi   2log|L| = %+.9f"
          % (fe.c, v.real, v.imag, s.script_l))

# ----------------------------------------------------------------------
# farther right the Euler product is nearly 1, so the statistic is tiny
print()
for sigma in (1.5, 2.0, 3.0):
    p = LValueParams(sigma=sigma)
    s = script_l(members[0], p)
    print("sigma = %.1f   2log|L| at c = %s:  %+.9f" % (sigma, members[0].c, s.script_l))

# ----------------------------------------------------------------------
# the smoothing bias: the leading error of the cutoff sum at sigma is
# L(sigma - 1)/X.  At sigma = 2 that is L(1)/X and the digits move;
# at sigma = 1 it is L(0)/X, a trivial zero, and the sum is exact.
fe = FamilyElement.of(GaussInt(-15, 0))
print()
for sigma in (2.0, 1.0):
    print("sigma = %.0f:" % sigma)
    for x in (1e5, 1e6):
        v = l_value(fe, LValueParams(sigma=sigma, cutoff_X=x))
        print("  cutoff X = %8.0f   L = %.12f" % (x, abs(v)))

"""
From characteristic function to density
=======================================

Inverts phi_sigma by the cosine transform to get the limiting density
of the statistic 2log|L|, reports the quadrature health numbers, and
sanity-checks the machinery on a Gaussian whose answer is known.
"""

import math

import numpy as np

from quartic_hecke import GridSpec, cdf_eval, inverse_transform, phi_grid_evaluator

# ----------------------------------------------------------------------
# the known-answer test first: a Gaussian characteristic function
tab = inverse_transform(lambda ys: np.exp(-ys * ys / 2.0) + 0.0j, 1.0, GridSpec())
ref = np.exp(-tab.t_grid**2 / 2.0) / math.sqrt(2.0 * math.pi)
print("gaussian check: sup |density - exact| = %.2e" % np.max(np.abs(tab.density - ref)))

# ----------------------------------------------------------------------
# now the real thing at sigma = 1 (modest prime cutoff keeps this quick)
ev = phi_grid_evaluator(1.0, 10**5)
tab = inverse_transform(ev, 1.0, GridSpec())
print()
print("sigma = 1 table:")
print("  auto y_max     %.1f" % tab.y_max)
print("  norm defect    %.2e" % tab.norm_defect)
print("  min density    %+.2e  (negative quadrature noise is kept, not clipped)" % tab.min_density)

# ----------------------------------------------------------------------
# the distribution sits mostly right of zero (|L(1)| is usually > 1)
# with a long left tail from the rare small values of |L|
i_mode = int(np.argmax(tab.density))
print("  mode at t = %+.2f with density %.4f" % (tab.t_grid[i_mode], tab.density[i_mode]))
mean = np.trapezoid(tab.t_grid * tab.density, tab.t_grid)
print("  mean %+.4f, mass below zero %.4f" % (mean, cdf_eval(tab, 0.0)))

# ----------------------------------------------------------------------
# quartiles through the cdf
print()
for q in (0.1, 0.25, 0.5, 0.75, 0.9):
    t_q = float(np.interp(q, tab.cdf, tab.t_grid))
    print("  F(t) = %.2f at t = %+.4f" % (q, t_q))
print("  F(0) = %.4f" % cdf_eval(tab, 0.0))

# ----------------------------------------------------------------------
# smaller sigma spreads the distribution out
ev = phi_grid_evaluator(0.75, 10**5)
tab75 = inverse_transform(ev, 0.75, GridSpec())
iqr = np.interp(0.75, tab75.cdf, tab75.t_grid) - np.interp(0.25, tab75.cdf, tab75.t_grid)
iqr1 = np.interp(0.75, tab.cdf, tab.t_grid) - np.interp(0.25, tab.cdf, tab.t_grid)
print()
print("interquartile width: %.4f at sigma = 1   vs   %.4f at sigma = 0.75" % (iqr1, iqr))

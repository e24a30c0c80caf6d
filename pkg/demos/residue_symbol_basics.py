"""
Quartic residue symbols in Z[i]
===============================

A tour of the symbol (m/n)_4: values on small pairs, the supplement
formulas for the units, and the reciprocity flip that powers the fast
evaluation.
"""

from quartic_hecke import GaussInt, symbol, symbol_prime_oracle
from quartic_hecke import primary_normalize, unit_supplement, ramified_supplement

# ----------------------------------------------------------------------
# values on a few pairs; n odd, the result is 0, 1, i, -1 or -i
pairs = [
    ("i", "-1-2i"),
    ("1+i", "3+2i"),
    ("3", "-1+4i"),
    ("5", "-1-2i"),  # shares the factor -1-2i, so the symbol vanishes
]
for sm, sn in pairs:
    m, n = GaussInt.parse(sm), GaussInt.parse(sn)
    print("(%s / %s)_4 = %s" % (m, n, symbol(m, n)))

# ----------------------------------------------------------------------
# the fast algorithm never factors n; the oracle does.  Same answers.
print()
m = GaussInt.parse("7+2i")
for sn in ("-1-2i", "3-2i", "-5+2i"):
    pi = GaussInt.parse(sn)
    print("fast %s  oracle %s  at pi = %s" % (symbol(m, pi), symbol_prime_oracle(m, pi), pi))

# ----------------------------------------------------------------------
# every odd Gaussian integer has exactly one primary associate,
# congruent to 1 mod (1+i)^3.  The supplements live on primaries.
print()
for sz in ("2+3i", "-15", "4+i"):
    z = GaussInt.parse(sz)
    s, z1 = primary_normalize(z)
    print("%s = i^%d * %s   (i/%s)_4 = i^%d   ((1+i)/%s)_4 = i^%d"
          % (z, s, z1, z1, unit_supplement(z1), z1, ramified_supplement(z1)))

# ----------------------------------------------------------------------
# reciprocity for primary a, b: (a/b) = (b/a) * (-1)^{(N(a)-1)/4 * (N(b)-1)/4}
print()
a = GaussInt.parse("3+2i")
b = GaussInt.parse("-7+2i")
na = ((a.re**2 + a.im**2) - 1) // 4
nb = ((b.re**2 + b.im**2) - 1) // 4
lhs, rhs = symbol(a, b), symbol(b, a)
print("(a/b) = %s, (b/a) = %s, sign exponent 2*%d*%d mod 4 = %d"
      % (lhs, rhs, na, nb, (2 * na * nb) % 4))

"""The quartic residue symbol in Z[i].

Two independent routes are provided on purpose:

* ``symbol_prime_oracle`` is the definition itself: raise to the power
  (N(pi)-1)/4 modulo a prime pi and match the result against the four
  roots of unity.  Slow, but it is the ground truth.
* ``symbol`` is the fast algorithm: strip units and 1+i powers with the
  supplement formulas, reduce, flip with the reciprocity law, iterate.
  It never factors its modulus.

Their agreement over exhaustive ranges is asserted by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussint import (
    GaussInt,
    FamilyElement,
    ONE,
    I_UNIT,
    RAMIFIED,
    divrem,
    is_odd,
    is_primary,
    norm,
    primary_normalize,
    _is_rational_prime,
)


@dataclass(frozen=True)
class QuarticValue:
    """An element of {0, 1, i, -1, -i}: Zero or Root(k) meaning i^k."""

    is_zero: bool
    k: int  # exponent of i in 0..3; 0 when is_zero

    @staticmethod
    def zero() -> "QuarticValue":
        return QuarticValue(True, 0)

    @staticmethod
    def root(k: int) -> "QuarticValue":
        return QuarticValue(False, k & 3)

    def __mul__(self, other: "QuarticValue") -> "QuarticValue":
        if self.is_zero or other.is_zero:
            return QuarticValue.zero()
        return QuarticValue.root(self.k + other.k)

    def value(self) -> complex:
        if self.is_zero:
            return 0j
        return (1 + 0j, 1j, -1 + 0j, -1j)[self.k]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ("1", "i", "-1", "-i")[self.k]


ROOT0 = QuarticValue.root(0)


def _validate_odd_prime(pi: GaussInt) -> int:
    """Return N(pi) after checking pi is an odd Gaussian prime."""
    n = norm(pi)
    if n == 0 or n == 1 or n == 2 or n % 2 == 0:
        raise ValueError("modulus must be an odd Gaussian prime")
    if _is_rational_prime(n):
        return n  # degree 1: norm is a rational prime = 1 mod 4
    # degree 2: an associate of a rational prime p = 3 mod 4
    if pi.re != 0 and pi.im != 0:
        raise ValueError("modulus is not a Gaussian prime")
    p = abs(pi.re) or abs(pi.im)
    if p % 4 != 3 or not _is_rational_prime(p):
        raise ValueError("modulus is not a Gaussian prime")
    return p * p


def _mod(a: GaussInt, m: GaussInt) -> GaussInt:
    return divrem(a, m)[1]


def _modmul(a: GaussInt, b: GaussInt, m: GaussInt) -> GaussInt:
    prod = GaussInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)
    return _mod(prod, m)


def symbol_prime_oracle(a: GaussInt, pi: GaussInt) -> QuarticValue:
    """(a/pi)_4 for prime pi by direct exponentiation: the defining congruence.

    Returns Zero when pi | a, otherwise the unique i^k congruent to
    a^{(N(pi)-1)/4} mod pi.
    """
    n = _validate_odd_prime(pi)
    a = _mod(a, pi)
    if a.is_zero():
        return QuarticValue.zero()
    e = (n - 1) // 4
    w = ONE
    base = a
    while e:
        if e & 1:
            w = _modmul(w, base, pi)
        e >>= 1
        if e:
            base = _modmul(base, base, pi)
    for k in range(4):
        root = (ONE, I_UNIT, GaussInt(-1, 0), GaussInt(0, -1))[k]
        if _mod(w - root, pi).is_zero():
            return QuarticValue.root(k)
    raise ValueError("exponentiation did not land on a root of unity; modulus not prime?")


def unit_supplement(n: GaussInt) -> int:
    """Exponent k with (i/n)_4 = i^k for primary n: k = (1 - re)/2 mod 4."""
    if not is_primary(n):
        raise ValueError("unit supplement needs a primary argument")
    a = n.re
    if (1 - a) % 2 != 0:
        raise AssertionError("primary element with even real part")
    return ((1 - a) // 2) % 4


def ramified_supplement(n: GaussInt) -> int:
    """Exponent k with ((1+i)/n)_4 = i^k for primary n = a+bi: (a-b-1-b^2)/4 mod 4."""
    if not is_primary(n):
        raise ValueError("ramified supplement needs a primary argument")
    a, b = n.re, n.im
    num = a - b - 1 - b * b
    if num % 4 != 0:
        raise AssertionError("supplement exponent not divisible by 4: normalization bug")
    return (num // 4) % 4


def symbol(m: GaussInt, n: GaussInt) -> QuarticValue:
    """The quartic symbol (m/n)_4 for odd n, computed without factoring n.

    Strips m into i^s (1+i)^t m1 with m1 primary, pays the supplements,
    then swaps m1 and n with the reciprocity sign and reduces.  Norms at
    least halve per round, so the loop is logarithmic.  Returns Zero
    exactly when gcd(m, n) is not a unit.  The symbol depends on n only
    through its odd prime factorization, so any unit multiple of n gives
    the same answer.
    """
    nn = norm(n)
    if nn == 0 or nn % 2 == 0:
        raise ValueError("symbol modulus must be odd and nonzero")
    norm(m)
    if nn == 1:
        return ROOT0
    _, n1 = primary_normalize(n)
    acc = 0
    m = _mod(m, n1)
    while True:
        if m.is_zero():
            return QuarticValue.zero()  # common factor: n1 is not a unit here
        t = 0
        while (m.re + m.im) % 2 == 0:
            m = GaussInt((m.re + m.im) // 2, (m.im - m.re) // 2)  # divide by 1+i
            t += 1
        s, m1 = primary_normalize(m)
        acc += s * unit_supplement(n1) + t * ramified_supplement(n1)
        if norm(m1) == 1:
            return QuarticValue.root(acc)
        # reciprocity flip: sign (-1)^{((N(n1)-1)/4)((N(m1)-1)/4)}
        if ((norm(n1) - 1) // 4) & 1 and ((norm(m1) - 1) // 4) & 1:
            acc += 2
        m, n1 = _mod(n1, m1), m1


def chi_c(c, z: GaussInt) -> QuarticValue:
    """The family character chi_c(z) = (z/c)_4.

    Accepts a FamilyElement or a plain odd GaussInt c.  For family
    members the value is invariant under unit multiples of z, hence
    well-defined on ideals via any generator.
    """
    base = c.c if isinstance(c, FamilyElement) else c
    if z.is_zero():
        raise ValueError("chi_c is evaluated at nonzero elements")
    return symbol(z, base)

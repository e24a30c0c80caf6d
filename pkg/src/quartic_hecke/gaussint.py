"""Exact arithmetic in Z[i].

Plain-integer Gaussian arithmetic: norms with an overflow guard,
Euclidean division with a deterministic rounding rule, gcd, primary
normalization, factorization into canonical prime generators, and the
bulk enumerations (prime ideals, the twist family, ideals by norm).

Conventions
-----------
* Canonical associate: "first quadrant" means re >= 1, im >= 0 (zero
  stays zero).  Exactly one associate of each nonzero element qualifies.
* Primary: an odd z with z = 1 mod (1+i)^3, equivalently
  (re, im) = (1, 0) or (3, 2) mod 4.  Exactly one associate of each odd
  element is primary.
* All norms are guarded against exceeding 2^62: operations reject such
  inputs instead of silently producing huge numbers downstream.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from math import isqrt

NORM_BOUND = 1 << 62


@dataclass(frozen=True)
class GaussInt:
    """An element a + bi of Z[i], exact."""

    re: int
    im: int

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        z = GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )
        norm(z)  # overflow guard on the result
        return z

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.re * self.re + self.im * self.im == 1

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        a, b = self.re, self.im
        if b == 0:
            return str(a)
        if b == 1:
            bi = "i"
        elif b == -1:
            bi = "-i"
        else:
            bi = f"{b}i"
        if a == 0:
            return bi
        return f"{a}+{bi}" if b > 0 else f"{a}{bi}"

    @staticmethod
    def parse(text: str) -> "GaussInt":
        """Parse the literal grammar "a+bi", "a-bi", "a", "bi" (signs optional)."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian integer literal")
        if not s.endswith("i"):
            if _re.fullmatch(r"[+-]?\d+", s):
                return GaussInt(int(s), 0)
            raise ValueError(f"not a Gaussian integer literal: {text!r}")
        body = s[:-1]
        m = _re.fullmatch(r"([+-]?\d+(?=[+-]))?([+-]?\d*)", body)
        if m is None:
            raise ValueError(f"not a Gaussian integer literal: {text!r}")
        a_part, b_part = m.groups()
        a = int(a_part) if a_part else 0
        if b_part in ("", "+"):
            b = 1
        elif b_part == "-":
            b = -1
        else:
            b = int(b_part)
        return GaussInt(a, b)


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I_UNIT = GaussInt(0, 1)
RAMIFIED = GaussInt(1, 1)  # 1 + i, the prime above 2


@dataclass(frozen=True)
class PrimeIdealRec:
    """A prime ideal of Z[i]: canonical generator, norm, residue degree.

    gen is primary for odd primes and 1+i for the ramified prime.
    """

    gen: GaussInt
    norm: int
    degree: int


@dataclass(frozen=True)
class GaussFactorization:
    """unit i^unit_exp times the product of gen^e over factors, exactly."""

    unit_exp: int
    factors: tuple  # of (PrimeIdealRec, int), sorted by (norm, gen.re, gen.im)

    def reconstruct(self) -> GaussInt:
        z = (I_UNIT ** self.unit_exp) if self.unit_exp else ONE
        for rec, e in self.factors:
            for _ in range(e):
                z = z * rec.gen
        return z


def _pow_unit(k: int) -> GaussInt:
    return (ONE, I_UNIT, GaussInt(-1, 0), GaussInt(0, -1))[k & 3]


def _gi_pow(self: GaussInt, k: int) -> GaussInt:
    if k < 0:
        raise ValueError("negative powers are not defined in Z[i]")
    out = ONE
    base = self
    while k:
        if k & 1:
            out = out * base
        k >>= 1
        if k:
            base = base * base
    return out


GaussInt.__pow__ = _gi_pow


@dataclass(frozen=True)
class FamilyElement:
    """A member of the twist family: c != 1, square-free, c = 1 mod 16."""

    c: GaussInt
    norm: int

    def __post_init__(self):
        n = norm(self.c)
        if n != self.norm:
            raise ValueError("norm field does not match c")
        if self.c == ONE:
            raise ValueError("c = 1 is excluded from the family")
        if (self.c.re - 1) % 16 != 0 or self.c.im % 16 != 0:
            raise ValueError("c must be congruent to 1 mod 16")
        if not is_squarefree(self.c):
            raise ValueError("c must be square-free")

    @staticmethod
    def of(c: GaussInt) -> "FamilyElement":
        return FamilyElement(c, norm(c))


def norm(z: GaussInt) -> int:
    """N(z) = re^2 + im^2; rejects results beyond the 2^62 guard."""
    n = z.re * z.re + z.im * z.im
    if n > NORM_BOUND:
        raise ValueError(f"norm {n} exceeds the 2^62 guard")
    return n


def _round_half_down(num: int, den: int) -> int:
    """Round num/den (den > 0) to the nearest integer, exact halves toward -inf."""
    q, r = divmod(2 * num + den, 2 * den)
    return q - 1 if r == 0 else q


def divrem(a: GaussInt, b: GaussInt) -> tuple:
    """q, r with a = q*b + r and N(r) <= N(b)/2.

    Both coordinates of a/b are rounded to the nearest integer with ties
    broken toward -inf, which pins down a unique remainder.
    """
    nb = norm(b)
    if nb == 0:
        raise ZeroDivisionError("division by zero in Z[i]")
    norm(a)
    # a * conj(b), built directly: its coordinates may exceed the norm
    # guard transiently, which is fine for exact integers
    t = GaussInt(a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im)
    q = GaussInt(_round_half_down(t.re, nb), _round_half_down(t.im, nb))
    r = GaussInt(a.re - (q.re * b.re - q.im * b.im), a.im - (q.re * b.im + q.im * b.re))
    return q, r


def gcd(a: GaussInt, b: GaussInt) -> GaussInt:
    """Greatest common divisor, canonicalized to the first-quadrant associate."""
    norm(a)
    norm(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    x, y = a, b
    while not y.is_zero():
        _, r = divrem(x, y)
        x, y = y, r
    return first_quadrant(x)


def first_quadrant(z: GaussInt) -> GaussInt:
    """The associate with re >= 1, im >= 0 (zero maps to zero)."""
    if z.is_zero():
        return z
    w = z
    for _ in range(4):
        if w.re >= 1 and w.im >= 0:
            return w
        w = GaussInt(-w.im, w.re)  # multiply by i
    raise AssertionError("unreachable: some rotation lands in the first quadrant")


def is_odd(z: GaussInt) -> bool:
    """True iff 1+i does not divide z, i.e. N(z) is odd."""
    return (z.re + z.im) % 2 == 1


def is_primary(z: GaussInt) -> bool:
    """True iff z = 1 mod (1+i)^3: (re, im) = (1, 0) or (3, 2) mod 4."""
    a = z.re % 4
    b = z.im % 4
    return (a == 1 and b == 0) or (a == 3 and b == 2)


def primary_normalize(z: GaussInt) -> tuple:
    """(k, z') with z = i^k * z' and z' primary; unique for odd z != 0."""
    if z.is_zero() or not is_odd(z):
        raise ValueError("primary normalization needs an odd nonzero element")
    w = z
    for k in range(4):
        if is_primary(w):
            return k, w
        # w = z * i^{-(k+1)}: rotate by -i
        w = GaussInt(w.im, -w.re)
    raise AssertionError("unreachable: exactly one associate of an odd element is primary")


def _exact_div(a: GaussInt, b: GaussInt) -> GaussInt:
    q, r = divrem(a, b)
    if not r.is_zero():
        raise ArithmeticError("inexact division where exact expected")
    return q


def _is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _factor_int(n: int) -> list:
    """Trial-division factorization of n, list of (p, multiplicity)."""
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    d = 5
    step = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += step
        step = 6 - step  # 5, 7, 11, 13, ... wheel
    if n > 1:
        out.append((n, 1))
    return out


def split_prime_generator(p: int) -> GaussInt:
    """A Gaussian prime above a rational prime p = 1 mod 4 (first quadrant).

    Finds s with s^2 = -1 mod p and takes gcd(p, s + i).
    """
    if p % 4 != 1 or not _is_rational_prime(p):
        raise ValueError("need a rational prime p = 1 mod 4")
    r = 2
    while pow(r, (p - 1) // 2, p) != p - 1:
        r += 1
    s = pow(r, (p - 1) // 4, p)
    return gcd(GaussInt(p, 0), GaussInt(s, 1))


def factor(z: GaussInt) -> GaussFactorization:
    """Factor z into i^k times powers of canonical prime generators.

    Trial division on the norm; rejects norms beyond 2^52.
    """
    if z.is_zero():
        raise ValueError("cannot factor zero")
    n = norm(z)
    if n > 1 << 52:
        raise ValueError("factorization budget is norms <= 2^52")
    factors = []
    w = z
    # ramified part
    t = 0
    while (w.re + w.im) % 2 == 0 and not w.is_zero():
        # divide by 1+i:  w / (1+i) = w * (1-i) / 2
        w = GaussInt((w.re + w.im) // 2, (w.im - w.re) // 2)
        t += 1
    if t:
        factors.append((PrimeIdealRec(RAMIFIED, 2, 1), t))
    # odd part via the rational factorization of its norm
    for p, alpha in _factor_int(norm(w)):
        if p % 4 == 3:
            if alpha % 2 != 0:
                raise AssertionError("inert prime exponent in a norm must be even")
            gen = GaussInt(-p, 0)  # the primary associate of p
            e = alpha // 2
            for _ in range(e):
                w = _exact_div(w, gen)
            factors.append((PrimeIdealRec(gen, p * p, 2), e))
        else:
            pi = split_prime_generator(p)
            for cand in (pi, pi.conj()):
                _, gen = primary_normalize(cand)
                e = 0
                while True:
                    q, r = divrem(w, gen)
                    if not r.is_zero():
                        break
                    w = q
                    e += 1
                if e:
                    factors.append((PrimeIdealRec(gen, p, 1), e))
    if not w.is_unit():
        raise AssertionError("leftover non-unit after factoring all norm primes")
    unit_exp = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}[(w.re, w.im)]
    factors.sort(key=lambda fe: (fe[0].norm, fe[0].gen.re, fe[0].gen.im))
    return GaussFactorization(unit_exp, tuple(factors))


def is_squarefree(z: GaussInt) -> bool:
    """True iff no prime ideal divides z twice.

    Works from the rational factorization of N(z): the ramified prime may
    appear at most once (v_2(N) <= 1); an inert p (3 mod 4) forces
    v_p(N) <= 2; a split p (1 mod 4) forces v_p(N) <= 2, and when
    v_p(N) = 2 the two exponents must be (1,1), i.e. p divides z itself.
    """
    if z.is_zero():
        raise ValueError("zero is not square-free")
    n = norm(z)
    if n > 1 << 52:
        raise ValueError("square-free test budget is norms <= 2^52")
    for p, alpha in _factor_int(n):
        if p == 2:
            if alpha >= 2:
                return False
        elif p % 4 == 3:
            if alpha > 2:
                return False
        else:
            if alpha > 2:
                return False
            if alpha == 2 and (z.re % p != 0 or z.im % p != 0):
                return False
    return True


def primes_up_to(X: int) -> list:
    """All prime ideals of norm <= X as PrimeIdealRec, sorted by (norm, gen).

    Primary generators for odd primes, 1+i for the ramified prime.
    """
    from . import _sieve

    if X < 2:
        return []
    nn, rr, ii, dd = _sieve.prime_ideal_arrays(int(X))
    out = []
    for n, r, i, d in zip(nn.tolist(), rr.tolist(), ii.tolist(), dd.tolist()):
        if n == 2:
            out.append(PrimeIdealRec(RAMIFIED, 2, 1))
        else:
            _, gen = primary_normalize(GaussInt(r, i))
            out.append(PrimeIdealRec(gen, n, int(d)))
    out.sort(key=lambda rec: (rec.norm, rec.gen.re, rec.gen.im))
    return out


def enumerate_C(Y: int) -> list:
    """The twist family: square-free c = 1 mod 16, c != 1, N(c) <= Y.

    Sorted by (norm, re, im).  The mod-16 condition picks exactly one
    associate per qualifying ideal, so no associate pairs occur.
    """
    Y = int(Y)
    out = []
    if Y < 1:
        return out
    s = isqrt(Y)
    cands = []
    a_min = 1 - 16 * ((s + 1) // 16)
    for a in range(a_min, s + 1, 16):
        rest = Y - a * a
        if rest < 0:
            continue
        bmax = isqrt(rest)
        for b in range(-16 * (bmax // 16), bmax + 1, 16):
            if a == 1 and b == 0:
                continue
            cands.append((a * a + b * b, a, b))
    cands.sort()
    for n, a, b in cands:
        c = GaussInt(a, b)
        if is_squarefree(c):
            out.append(FamilyElement(c, n))
    return out


def first_quadrant_by_norm(X: int):
    """Yield one canonical generator per ideal of norm <= X, by nondecreasing norm."""
    from . import _sieve

    if X < 1:
        return
    nn, rr, ii = _sieve.first_quadrant_arrays(int(X))
    for r, i in zip(rr.tolist(), ii.tolist()):
        yield GaussInt(r, i)

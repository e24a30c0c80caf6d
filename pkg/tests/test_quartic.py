"""The quartic residue symbol: oracle agreement, reciprocity, character laws."""

import itertools
import random

import pytest

from quartic_hecke.gaussint import (
    GaussInt,
    FamilyElement,
    gcd,
    is_odd,
    norm,
    factor,
    primary_normalize,
    primes_up_to,
    enumerate_C,
)
from quartic_hecke.quartic import (
    QuarticValue,
    symbol_prime_oracle,
    unit_supplement,
    ramified_supplement,
    symbol,
    chi_c,
)


def primary_primes(X):
    return [primary_normalize(p.gen)[1] for p in primes_up_to(X) if p.norm % 2 == 1]


def factored_oracle(m, n):
    """(m/n) assembled from prime symbols of the factorization of n."""
    out = QuarticValue.root(0)
    for rec, e in factor(n).factors:
        s = symbol_prime_oracle(m, rec.gen)
        for _ in range(e):
            out = out * s
    return out


def test_quartic_value_algebra():
    z = QuarticValue.zero()
    assert z.is_zero and str(z) == "0" and z.value() == 0
    vals = [QuarticValue.root(k) for k in range(4)]
    assert [str(v) for v in vals] == ["1", "i", "-1", "-i"]
    assert [v.value() for v in vals] == [1, 1j, -1, -1j]
    for a in range(4):
        for b in range(4):
            prod = vals[a] * vals[b]
            assert prod == QuarticValue.root((a + b) % 4)
            assert prod.value() == vals[a].value() * vals[b].value()
        assert (vals[a] * z).is_zero
        assert (z * vals[a]).is_zero
    assert QuarticValue.root(7) == QuarticValue.root(3)


def test_oracle_validation():
    with pytest.raises(ValueError):
        symbol_prime_oracle(GaussInt(1, 0), GaussInt(1, 1))  # ramified modulus
    with pytest.raises(ValueError):
        symbol_prime_oracle(GaussInt(1, 0), GaussInt(21, 0))  # composite
    with pytest.raises(ValueError):
        symbol_prime_oracle(GaussInt(1, 0), GaussInt(6, 3))  # composite, off-axis
    with pytest.raises(ValueError):
        symbol_prime_oracle(GaussInt(1, 0), GaussInt(1, 0))  # unit
    # norm 25 = 5^2 is not prime (5 splits)
    with pytest.raises(ValueError):
        symbol_prime_oracle(GaussInt(1, 0), GaussInt(5, 0))


def test_supplement_frozen_values():
    assert unit_supplement(GaussInt(1, 0)) == 0
    assert unit_supplement(GaussInt(-1, -2)) == 1
    assert unit_supplement(GaussInt(-3, 0)) == 2
    assert ramified_supplement(GaussInt(1, 0)) == 0
    assert ramified_supplement(GaussInt(-1, -2)) == 3
    assert ramified_supplement(GaussInt(-3, 0)) == 3
    with pytest.raises(ValueError):
        unit_supplement(GaussInt(3, 0))  # not primary
    with pytest.raises(ValueError):
        ramified_supplement(GaussInt(1, 2))


def test_supplements_match_oracle():
    """The closed-form unit and ramified exponents equal the defining
    congruence at every primary prime of norm <= 2000."""
    for pi in primary_primes(2000):
        assert symbol_prime_oracle(GaussInt(0, 1), pi) == QuarticValue.root(unit_supplement(pi))
        assert symbol_prime_oracle(GaussInt(1, 1), pi) == QuarticValue.root(
            ramified_supplement(pi)
        )


def test_supplements_multiply_over_products():
    # supplements are additive in the modulus: check on pairwise products
    prims = primary_primes(200)
    for p1, p2 in itertools.combinations(prims, 2):
        n = p1 * p2
        assert unit_supplement(n) == (unit_supplement(p1) + unit_supplement(p2)) % 4
        assert ramified_supplement(n) == (
            ramified_supplement(p1) + ramified_supplement(p2)
        ) % 4


def test_symbol_frozen_values():
    cases = [
        ("i", "-1-2i", "i"),
        ("3+2i", "-15", "i"),
        ("2+i", "1+16i", "-1"),
        ("7", "-15", "1"),
        ("i", "-3+2i", "-i"),
        ("1+i", "-3+2i", "1"),
        ("5+4i", "33+16i", "i"),
        ("-6+i", "21+20i", "1"),
    ]
    for m, n, want in cases:
        assert str(symbol(GaussInt.parse(m), GaussInt.parse(n))) == want


def test_symbol_validation():
    with pytest.raises(ValueError):
        symbol(GaussInt(1, 0), GaussInt(0, 0))
    with pytest.raises(ValueError):
        symbol(GaussInt(1, 0), GaussInt(1, 1))  # even modulus
    with pytest.raises(ValueError):
        symbol(GaussInt(1, 0), GaussInt(4, 2))
    # unit modulus: empty product of primes
    assert symbol(GaussInt(0, 0), GaussInt(0, 1)) == QuarticValue.root(0)
    assert symbol(GaussInt(5, 3), GaussInt(-1, 0)) == QuarticValue.root(0)


def test_symbol_matches_oracle_at_primes():
    for pi in primary_primes(300):
        for re in range(-6, 7):
            for im in range(-6, 7):
                m = GaussInt(re, im)
                if m.is_zero():
                    continue
                assert symbol(m, pi) == symbol_prime_oracle(m, pi)


def test_symbol_matches_factored_oracle_composite():
    rng = random.Random(11)
    checked = 0
    while checked < 250:
        m = GaussInt(rng.randint(-30, 30), rng.randint(-30, 30))
        n = GaussInt(rng.randint(-30, 30), rng.randint(-30, 30))
        if m.is_zero() or n.is_zero() or not is_odd(n) or norm(n) == 1:
            continue
        assert symbol(m, n) == factored_oracle(m, n)
        checked += 1


def test_reciprocity():
    """(m/n)(n/m)^{-1} = (-1)^{((N(m)-1)/4)((N(n)-1)/4)} on primary primes."""
    prims = primary_primes(500)
    for p1, p2 in itertools.combinations(prims, 2):
        if not gcd(p1, p2).is_unit():
            continue
        a = symbol(p1, p2)
        b = symbol(p2, p1)
        flip = 2 if (((norm(p1) - 1) // 4) & 1 and ((norm(p2) - 1) // 4) & 1) else 0
        assert not a.is_zero and not b.is_zero
        assert (a.k - b.k - flip) % 4 == 0


def test_multiplicative_in_numerator():
    rng = random.Random(7)
    n = GaussInt(-15, 0)
    for _ in range(500):
        m1 = GaussInt(rng.randint(-30, 30), rng.randint(-30, 30))
        m2 = GaussInt(rng.randint(-30, 30), rng.randint(-30, 30))
        if m1.is_zero() or m2.is_zero():
            continue
        assert symbol(m1 * m2, n) == symbol(m1, n) * symbol(m2, n)


def test_multiplicative_in_denominator():
    rng = random.Random(8)
    for _ in range(300):
        m = GaussInt(rng.randint(-20, 20), rng.randint(-20, 20))
        n1 = GaussInt(rng.randint(-15, 15), rng.randint(-15, 15))
        n2 = GaussInt(rng.randint(-15, 15), rng.randint(-15, 15))
        if m.is_zero() or n1.is_zero() or n2.is_zero():
            continue
        if not is_odd(n1) or not is_odd(n2):
            continue
        assert symbol(m, n1 * n2) == symbol(m, n1) * symbol(m, n2)


def test_periodic_mod_n():
    rng = random.Random(9)
    n = GaussInt(21, 20)
    for _ in range(500):
        m = GaussInt(rng.randint(-40, 40), rng.randint(-40, 40))
        k = GaussInt(rng.randint(-5, 5), rng.randint(-5, 5))
        assert symbol(m + k * n, n) == symbol(m, n)


def test_modulus_unit_invariance():
    rng = random.Random(10)
    n = GaussInt(-15, 0)
    units = [GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1)]
    for _ in range(200):
        m = GaussInt(rng.randint(-30, 30), rng.randint(-30, 30))
        if m.is_zero():
            continue
        for u in units:
            assert symbol(m, n * u) == symbol(m, n)


def test_conjugation_symmetry():
    rng = random.Random(3)
    for _ in range(500):
        m = GaussInt(rng.randint(-25, 25), rng.randint(-25, 25))
        n = GaussInt(rng.randint(-25, 25), rng.randint(-25, 25))
        if m.is_zero() or n.is_zero() or not is_odd(n) or norm(n) == 1:
            continue
        a = symbol(m.conj(), n.conj())
        b = symbol(m, n)
        assert a.is_zero == b.is_zero
        if not a.is_zero:
            assert (a.k + b.k) % 4 == 0


def test_quartic_power_laws():
    rng = random.Random(5)
    for _ in range(300):
        m = GaussInt(rng.randint(-20, 20), rng.randint(-20, 20))
        n = GaussInt(rng.randint(-20, 20), rng.randint(-20, 20))
        if m.is_zero() or n.is_zero() or not is_odd(n) or norm(n) == 1:
            continue
        s = symbol(m, n)
        assert symbol(m * m, n) == s * s
        if not s.is_zero:
            assert symbol(m ** 4, n) == QuarticValue.root(0)


def test_zero_iff_common_factor():
    rng = random.Random(6)
    for _ in range(800):
        m = GaussInt(rng.randint(-20, 20), rng.randint(-20, 20))
        n = GaussInt(rng.randint(-20, 20), rng.randint(-20, 20))
        if m.is_zero() or n.is_zero() or not is_odd(n) or norm(n) == 1:
            continue
        assert symbol(m, n).is_zero == (not gcd(m, n).is_unit())


def test_chi_c_accepts_both_forms():
    fe = FamilyElement.of(GaussInt(-15, 0))
    z = GaussInt(3, 2)
    assert chi_c(fe, z) == chi_c(GaussInt(-15, 0), z) == symbol(z, GaussInt(-15, 0))
    with pytest.raises(ValueError):
        chi_c(fe, GaussInt(0, 0))


def test_chi_c_trivial_on_units_and_ramified():
    """chi_c(i) = chi_c(1+i) = 1 for every family member: the defining
    congruence c = 1 mod 16 kills both supplements."""
    for fe in enumerate_C(10_000):
        assert chi_c(fe, GaussInt(0, 1)) == QuarticValue.root(0)
        assert chi_c(fe, GaussInt(1, 1)) == QuarticValue.root(0)


def test_chi_c_multiplicative_on_ideals():
    """chi_c is well-defined on ideals: same value at every associate."""
    fe = FamilyElement.of(GaussInt(1, 16))
    rng = random.Random(12)
    for _ in range(200):
        z = GaussInt(rng.randint(-30, 30), rng.randint(-30, 30))
        if z.is_zero():
            continue
        base = chi_c(fe, z)
        for k in range(1, 4):
            assert chi_c(fe, z * GaussInt(0, 1) ** k) == base

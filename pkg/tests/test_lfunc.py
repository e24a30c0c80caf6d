"""Tests for the L-value module: the smoothed series against independent
direct sums, the statistic script_l, family counts, and the density constant."""

import math

import pytest
from scipy.special import zeta as riemann_zeta

from quartic_hecke import _engine
from quartic_hecke.gaussint import (FamilyElement, GaussInt, enumerate_C,
                                    first_quadrant_by_norm, norm)
from quartic_hecke.lfunc import (FamilyLTable, LValueParams, density_constant,
                                 direct_l_sigma2, empirical_char_fn, l_value,
                                 residue_zeta_k, s_count, s_star, script_l,
                                 unit_orbit_class_count, zeta_k2)
from quartic_hecke.quartic import chi_c

C15 = enumerate_C(225)[0]


def family_member(re, im):
    return FamilyElement.of(GaussInt(re, im))


def smoothed_direct(fe, sigma, X):
    """Term-by-term smoothed sum with per-ideal symbol evaluation.

    Shares nothing with the sieved engine: characters come from the
    generic symbol, ideals from the plain generator list, and the tail
    is padded 30% past the engine's own cutoff so both discard < 1e-10.
    """
    limit = _engine.summation_limit(sigma, X)
    tot = 0j
    for z in first_quadrant_by_norm(int(limit * 1.3)):
        v = chi_c(fe, z)
        if v.is_zero:
            continue
        n = norm(z)
        tot += v.value() * n ** -sigma * math.exp(-n / X)
    return tot


class TestParams:
    def test_sigma_range(self):
        with pytest.raises(ValueError):
            LValueParams(sigma=0.5)
        with pytest.raises(ValueError):
            LValueParams(sigma=4.0001)
        LValueParams(sigma=0.50001)
        LValueParams(sigma=4.0)

    def test_positive_fields(self):
        with pytest.raises(ValueError):
            LValueParams(sigma=1.0, cutoff_X=0.0)
        with pytest.raises(ValueError):
            LValueParams(sigma=1.0, zero_threshold=0.0)

    def test_default_cutoff_is_norm_floor(self):
        p = LValueParams(sigma=1.0)
        assert p.cutoff_for(C15) == 10_000.0
        big = family_member(1, 112)  # norm 12545 > 10^4
        assert p.cutoff_for(big) == float(big.norm)

    def test_explicit_cutoff_must_cover_conductor(self):
        p = LValueParams(sigma=1.0, cutoff_X=100.0)
        with pytest.raises(ValueError):
            p.cutoff_for(C15)


class TestEngineAgainstDirect:
    """The sieved evaluator against the definition, term by term."""

    @pytest.mark.parametrize("re,im,sigma,X", [
        (-15, 0, 1.0, 50.0),
        (-15, 0, 0.75, 50.0),
        (-15, 0, 0.6, 40.0),
        (1, 16, 1.5, 300.0),
        (17, 0, 2.0, 300.0),
    ])
    def test_small_cutoffs(self, re, im, sigma, X):
        fe = family_member(re, im)
        got = _engine.l_sum(fe.c, sigma, X)
        want = smoothed_direct(fe, sigma, X)
        assert abs(got - want) < 1e-9

    def test_char_tables_match_symbol(self):
        for re, im in [(-15, 0), (33, 16)]:
            fe = family_member(re, im)
            tables = _engine.CharTables(fe.c)
            for z in first_quadrant_by_norm(400):
                v = chi_c(fe, z)
                g = tables.exponent_of(z)
                if v.is_zero:
                    assert g == -1
                else:
                    assert g == v.k

    def test_summation_limit_meets_tail_bound(self):
        for sigma in (0.6, 0.75, 1.0, 2.0):
            for X in (50.0, 1e4, 3e5):
                T = _engine.summation_limit(sigma, X)
                assert T >= X * math.log(1e10)
                bound = 4.0 * (T + X) * T ** -sigma * math.exp(-T / X)
                assert bound < 1e-10


class TestLValueExamples:
    def test_sigma4_near_one(self):
        p = LValueParams(sigma=4.0)
        for fe in enumerate_C(300):
            assert abs(l_value(fe, p) - 1.0) < 0.3

    def test_sigma2_against_unsmoothed_partial_sum(self):
        # absolute convergence at sigma = 2: the plain partial sum to
        # norm 1e7 is its own oracle, no smoothing involved
        direct = direct_l_sigma2(C15, 10_000_000)
        assert abs(direct.imag) < 1e-12
        v = l_value(C15, LValueParams(sigma=2.0, cutoff_X=4e6))
        assert abs(v - direct) < 1e-6

    def test_frozen_values(self):
        # pinned from this implementation; guards future refactors
        for sigma, want in [(1.0, 1.735259302665),
                            (2.0, 1.323321061666),
                            (0.75, 1.828134169027)]:
            v = l_value(C15, LValueParams(sigma=sigma, cutoff_X=3e6))
            assert abs(v.real - want) < 5e-12
            assert abs(v.imag) < 1e-12

    def test_cutoff_doubling_stability(self):
        for sigma in (0.75, 1.0, 2.0):
            a = l_value(C15, LValueParams(sigma=sigma, cutoff_X=3e6))
            b = l_value(C15, LValueParams(sigma=sigma, cutoff_X=6e6))
            assert abs(a - b) < 1e-6


class TestScriptL:
    def test_matches_log_modulus_squared(self):
        p = LValueParams(sigma=1.0)
        s = script_l(C15, p)
        v = l_value(C15, p)
        assert isinstance(s.script_l, float)
        assert not s.excluded
        assert s.script_l == pytest.approx(math.log(abs(v) ** 2), abs=1e-15)

    def test_conjugate_member_same_statistic(self):
        p = LValueParams(sigma=1.0)
        a = script_l(family_member(1, 16), p)
        b = script_l(family_member(1, -16), p)
        assert abs(a.script_l - b.script_l) < 1e-12

    def test_doubled_cutoff_reproduces_value(self):
        a = script_l(C15, LValueParams(sigma=1.0, cutoff_X=1e4))
        b = script_l(C15, LValueParams(sigma=1.0, cutoff_X=2e4))
        assert abs(a.script_l - b.script_l) < 1e-5

    def test_exclusion_flag(self):
        # an absurdly large threshold forces the zero branch
        s = script_l(C15, LValueParams(sigma=1.0, zero_threshold=10.0))
        assert s.excluded
        assert math.isnan(s.script_l)
        assert s.weight == 1.0


class TestCounting:
    def test_smallest_members(self):
        assert s_count(225) == 1
        assert s_count(200) == 0

    def test_count_nondecreasing(self):
        vals = [s_count(Y) for Y in (225, 500, 1000, 2000, 4000)]
        assert vals == sorted(vals)
        assert vals[0] >= 1

    def test_star_bounded_by_sharp_count(self):
        Y = 800.0
        bound = int(Y * math.log(1e4))
        assert s_star(Y) <= s_count(bound)

    def test_star_frozen_value(self):
        assert s_star(1e3) == pytest.approx(10.34574477652275, abs=1e-9)

    def test_star_tracks_density_constant(self):
        Y = 1e5
        ratio = s_star(Y) / (density_constant() * Y)
        assert abs(ratio - 1.0) < 0.07

    def test_star_domain(self):
        with pytest.raises(ValueError):
            s_star(0.5)


def cvz_alternating(term, n=40):
    """Cohen-Villegas-Zagier acceleration of sum (-1)^k term(k), k >= 0."""
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b, c, s = -1.0, -d, 0.0
    for k in range(n):
        c = b - c
        s += c * term(k)
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return s / d


class TestDensityConstant:
    def test_orbit_enumeration(self):
        # 128 odd residues mod 16 in 4-element unit orbits
        assert unit_orbit_class_count() == 32

    def test_zeta_k2_against_series(self):
        # zeta(2) by partial sum with Euler-Maclaurin tail, Catalan by
        # accelerated alternating series: independent of the library's
        # closed forms
        N = 4000
        z2 = math.fsum(1.0 / (n * n) for n in range(1, N + 1))
        z2 += 1.0 / N - 1.0 / (2.0 * N * N) + 1.0 / (6.0 * N ** 3)
        catalan = cvz_alternating(lambda k: 1.0 / (2 * k + 1) ** 2)
        assert abs(zeta_k2() - z2 * catalan) < 1e-12
        assert zeta_k2() == pytest.approx(1.5067, abs=5e-5)

    def test_residue_by_extrapolation(self):
        # (s-1) zeta_K(s) -> residue as s -> 1+, Richardson style
        def f(h):
            beta = cvz_alternating(lambda k: (2 * k + 1.0) ** -(1.0 + h))
            return h * float(riemann_zeta(1.0 + h)) * beta

        hs = [0.4 * 2.0 ** -j for j in range(7)]
        vals = [f(h) for h in hs]
        # Neville extrapolation to h = 0
        for level in range(1, len(hs)):
            for j in range(len(hs) - level):
                num = hs[j] * vals[j + 1] - hs[j + level] * vals[j]
                vals[j] = num / (hs[j] - hs[j + level])
            vals = vals[:len(hs) - level]
        assert abs(vals[0] - math.pi / 4.0) < 1e-6
        assert residue_zeta_k() == math.pi / 4.0

    def test_assembled_value(self):
        kappa = density_constant()
        assert kappa == pytest.approx(0.0109, rel=0.01)
        want = (2.0 / 3.0) * (math.pi / 4.0) / (32.0 * zeta_k2())
        assert kappa == pytest.approx(want, rel=1e-14)


class TestEmpiricalCharFn:
    def test_zero_frequency_is_exactly_one(self):
        p = LValueParams(sigma=1.0)
        table = FamilyLTable(p)
        v = empirical_char_fn(1.0, 0.0, 300.0, p, table=table)
        assert not any(s.excluded for s in table.values.values())
        assert v == 1.0 + 0.0j

    def test_conjugate_symmetry_and_modulus(self):
        p = LValueParams(sigma=1.0)
        table = FamilyLTable(p)
        for y in (0.3, 0.7, 1.9):
            v = empirical_char_fn(1.0, y, 300.0, p, table=table)
            w = empirical_char_fn(1.0, -y, 300.0, p, table=table)
            assert w == v.conjugate()
            assert abs(v) <= 1.0 + 1e-12

    def test_thread_count_invariance(self):
        p = LValueParams(sigma=1.0)
        t1 = FamilyLTable(p)
        v1 = empirical_char_fn(1.0, 0.7, 300.0, p, table=t1, threads=1)
        t3 = FamilyLTable(p)
        v3 = empirical_char_fn(1.0, 0.7, 300.0, p, table=t3, threads=3)
        assert v1 == v3

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            empirical_char_fn(1.0, 0.5, 224.0)
        with pytest.raises(ValueError):
            empirical_char_fn(1.0, 0.5, 300.0, LValueParams(sigma=2.0))

    def test_table_reuse_across_scales(self):
        # one table serves every Y below its bound: values are identical
        # to a freshly built table's
        p = LValueParams(sigma=1.0)
        shared = FamilyLTable(p)
        big = empirical_char_fn(1.0, 0.7, 400.0, p, table=shared)
        fresh = FamilyLTable(p)
        small = empirical_char_fn(1.0, 0.7, 300.0, p, table=fresh)
        again = empirical_char_fn(1.0, 0.7, 300.0, p, table=shared)
        assert small == again
        assert big != small  # different Y genuinely reweights


class TestSigmaTwoInvariant:
    def test_every_small_conductor_matches_direct(self):
        # smoothing bias at sigma = 2 is L(1, chi)/X, so the cutoff must
        # sit well above the conductor scale for a 1e-6 comparison; the
        # direct sum itself is stable to ~1e-11 by norm 2e6
        p = LValueParams(sigma=2.0, cutoff_X=6e6)
        fam = enumerate_C(2000)
        assert len(fam) >= 15
        for fe in fam:
            direct = direct_l_sigma2(fe, 2_000_000)
            assert abs(l_value(fe, p) - direct) < 1e-6, str(fe.c)

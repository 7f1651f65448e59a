"""Zeta summation, determinant series, and functional-equation residuals."""

import mpmath as mp
import pytest

from osczeta import closedforms as cf
from osczeta.errors import (
    DivergentSeriesError,
    InsufficientTermsError,
    RadiusExceededError,
    SummationPoleError,
)
from osczeta.zetafns import (
    BohrSommerfeldCoeffs,
    bohr_sommerfeld_b0,
    determinant_series,
    functional_eq_residual,
    zeta_em,
)


class TestBohrSommerfeld:
    def test_b0_harmonic(self):
        # action of q^2 at energy E is pi E, so b0 = pi
        with mp.workdps(40):
            assert abs(bohr_sommerfeld_b0(2, 35) - mp.pi) < mp.mpf("1e-33")

    def test_b0_square_well_limit(self):
        # N -> infinity approaches the infinite well value 4
        assert abs(bohr_sommerfeld_b0(4000, 20) - 4) < mp.mpf("0.01")

    def test_coeffs_harmonic_linear(self):
        c = BohrSommerfeldCoeffs.compute(2, 30)
        assert c.b1 == 0
        assert abs(c.mu - 1) < mp.mpf("1e-28")

    def test_cubic_b1_negative(self):
        c = BohrSommerfeldCoeffs.compute(3, 30)
        assert c.b1 < 0


class TestZetaEM:
    def test_harmonic_full_vs_dirichlet_lambda(self, spectra2):
        with mp.workdps(40):
            for n in (2, 3, 4):
                zv = zeta_em(2, "full", n, spectra2, dps=30)
                ref = cf.dirichlet_lambda(n, 35)
                assert abs(zv.value - ref) \
                    < mp.mpf(10) ** (-zv.certified_digits)
                assert zv.certified_digits >= 20

    def test_harmonic_twisted_vs_dirichlet_beta(self, spectra2):
        with mp.workdps(40):
            for n in (1, 2, 3):
                zv = zeta_em(2, "twisted", n, spectra2, dps=30)
                ref = cf.dirichlet_beta(n, 35)
                assert abs(zv.value - ref) \
                    < mp.mpf(10) ** (-zv.certified_digits)

    def test_single_parity_needs_one_record(self, spectra2):
        plus, _ = spectra2
        zv = zeta_em(2, "plus", 2, plus, dps=30)
        with mp.workdps(40):
            # sum over (4j+1)^-2 = (zeta(2,1/4))/16
            ref = mp.zeta(2, mp.mpf("0.25")) / 16
            assert abs(zv.value - ref) < mp.mpf(10) ** (-zv.certified_digits)

    def test_pole_and_divergence_guards(self, spectra3):
        # the pole guard compares against the counting coefficients' mu
        mu = BohrSommerfeldCoeffs.compute(3, 20).mu
        with pytest.raises(SummationPoleError):
            zeta_em(3, "full", mu, spectra3, dps=20)
        with pytest.raises(DivergentSeriesError):
            zeta_em(3, "full", mp.mpf("0.5"), spectra3, dps=20)
        with pytest.raises(DivergentSeriesError):
            zeta_em(3, "twisted", 0, spectra3, dps=20)

    def test_missing_parity_rejected(self, spectra3):
        plus, _ = spectra3
        with pytest.raises(InsufficientTermsError):
            zeta_em(3, "full", 2, plus, dps=20)

    def test_certificate_is_honest(self, spectra3):
        # EM value vs the alternating closed form at s=1
        zv = zeta_em(3, "twisted", 1, spectra3, dps=30)
        with mp.workdps(40):
            ref = cf.zeta_one(3, "twisted", 35)
            assert abs(zv.value - ref) < mp.mpf(10) ** (-zv.certified_digits)


class TestDeterminant:
    def harmonic_inputs(self, kind, M=120, dps=40):
        vals = [cf.harmonic_zeta(kind, n, dps) for n in range(1, M + 1)]
        return vals, cf.zeta_prime0(2, kind, dps)

    def test_full_determinant_closed_form(self):
        vals, zp0 = self.harmonic_inputs("full")
        with mp.workdps(40):
            for lam in ("-0.5", "0.3", "0.6"):
                d = determinant_series(2, "full", mp.mpf(lam), vals, zp0, 30)
                ref = cf.harmonic_determinant("full", mp.mpf(lam), 35)
                assert abs(d - ref) < mp.mpf("1e-25")

    def test_radius_guard(self):
        vals, zp0 = self.harmonic_inputs("full", M=40)
        with pytest.raises(RadiusExceededError):
            determinant_series(2, "full", mp.mpf("1.2"), vals, zp0, 30)

    def test_tail_guard(self):
        # too few terms for the requested precision near the disk edge
        vals, zp0 = self.harmonic_inputs("full", M=12)
        with pytest.raises(InsufficientTermsError):
            determinant_series(2, "full", mp.mpf("0.9"), vals, zp0, 40)

    def test_complex_argument(self):
        vals, zp0 = self.harmonic_inputs("full")
        d = determinant_series(2, "full", mp.mpc("0.2", "0.3"), vals, zp0, 30)
        assert isinstance(d, mp.mpc)


class TestFunctionalEquation:
    def test_harmonic_residual_tiny(self):
        M, dps = 120, 40
        pv = [cf.harmonic_zeta("plus", n, dps) for n in range(1, M + 1)]
        mv = [cf.harmonic_zeta("minus", n, dps) for n in range(1, M + 1)]
        pp = cf.zeta_prime0(2, "plus", dps)
        mm = cf.zeta_prime0(2, "minus", dps)
        for lam in ("0.25", "-0.2"):
            res = functional_eq_residual(2, mp.mpf(lam), pv, mv, pp, mm, 30)
            assert res < mp.mpf("1e-22")

    def test_wrong_inputs_give_large_residual(self):
        # corrupting one zeta value must be visible in the residual
        M, dps = 120, 40
        pv = [cf.harmonic_zeta("plus", n, dps) for n in range(1, M + 1)]
        mv = [cf.harmonic_zeta("minus", n, dps) for n in range(1, M + 1)]
        pp = cf.zeta_prime0(2, "plus", dps)
        mm = cf.zeta_prime0(2, "minus", dps)
        pv[0] = pv[0] + mp.mpf("1e-6")
        res = functional_eq_residual(2, mp.mpf("0.25"), pv, mv, pp, mm, 30)
        assert res > mp.mpf("1e-8")

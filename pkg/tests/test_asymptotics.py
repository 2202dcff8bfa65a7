import math
from fractions import Fraction

import pytest

from lcmbounds import asymptotics as asy
from lcmbounds.errors import ResourceLimitError
from lcmbounds.number_theory import harmonic
from lcmbounds.progression import Progression, lcm_value


class TestMangoldtCharacterization:
    def test_reconstructs_odd_lcm(self):
        got = asy.log_lcm_via_mangoldt(Progression(1, 2), 4)
        assert got.reconstruction == 315
        assert got.log_sum == pytest.approx(math.log(315), abs=1e-9)

    def test_n_zero(self):
        assert asy.log_lcm_via_mangoldt(Progression(9, 2), 0).reconstruction == 9

    def test_three_mod_four(self):
        assert asy.log_lcm_via_mangoldt(Progression(3, 4), 3).reconstruction == 1155

    def test_sieve_cap(self):
        with pytest.raises(ResourceLimitError):
            asy.log_lcm_via_mangoldt(Progression(1, 2), 10**7)


class TestStep2:
    def test_closed_boundary_witness(self):
        # d = 3 lands exactly on u_n = 3 (l_d = 1); the closed convention
        # keeps it and the rebuild matches L_1 = lcm(1, 3) = 3.
        got = asy.step2_characterization(Progression(1, 2), 1)
        assert got.reconstruction == 3

    def test_sum_matches_log(self):
        assert asy.step2_sum(Progression(1, 2), 4) == pytest.approx(math.log(315), abs=1e-9)

    def test_n_zero_unit_start(self):
        assert asy.step2_sum(Progression(1, 3), 0) == 0.0
        assert asy.step2_characterization(Progression(1, 3), 0).reconstruction == 1

    def test_rejects_r_one(self):
        with pytest.raises(ValueError):
            asy.step2_sum(Progression(1, 1), 4)

    def test_exactness_examples(self):
        assert asy.step2_exactness(Progression(1, 2), 0)
        assert asy.step2_exactness(Progression(1, 2), 500)
        # u0=9, r=2: m in {1,3,5,7}; 5 does not divide 9
        assert not asy.step2_exactness(Progression(9, 2), 0)
        flags = [asy.step2_exactness(Progression(9, 2), n) for n in range(8)]
        assert flags == [False] * 6 + [True, True]  # 21 = u_6 brings the factor 7

    def test_reconstruction_when_exact(self):
        for u0, r in ((1, 2), (1, 3), (2, 3), (3, 4), (9, 2)):
            prog = Progression(u0, r)
            for n in range(0, 40):
                if asy.step2_exactness(prog, n):
                    assert (
                        asy.step2_characterization(prog, n).reconstruction
                        == lcm_value(prog, n)
                    ), (u0, r, n)

    def test_inexact_overestimates(self):
        # at (9,2), n=0 the class of 9 contains 3 < 9 with 3 | 9... the
        # first failing modulus is 5: the rebuild picks up spurious factors
        got = asy.step2_characterization(Progression(9, 2), 0).reconstruction
        assert got % lcm_value(Progression(9, 2), 0) == 0
        assert got > 9


class TestMainTerms:
    def test_unit_sum_r4(self):
        prog = Progression(1, 4)
        n = 10
        assert asy.step3_main_term(prog, n) == pytest.approx(prog.term(n) * 2 / 3)

    def test_unit_sum_r2(self):
        prog = Progression(1, 2)
        assert asy.step3_main_term(prog, 7) == pytest.approx(prog.term(7))

    def test_unit_sum_r3(self):
        prog = Progression(1, 3)
        assert asy.step3_main_term(prog, 5) == pytest.approx(0.75 * prog.term(5))

    def test_harmonic_form_matches_for_primes(self):
        for r in (2, 3, 5):
            prog = Progression(1, r)
            for n in (0, 3, 50):
                assert asy.step4_main_term(prog, n) == asy.step3_main_term(prog, n)

    def test_harmonic_form_values(self):
        prog5 = Progression(1, 5)
        n = 9
        assert asy.step4_main_term(prog5, n) == pytest.approx(
            prog5.term(n) * float(Fraction(25, 12)) / 4
        )

    def test_composite_r_rejected(self):
        with pytest.raises(ValueError):
            asy.step4_main_term(Progression(1, 4), 5)


class TestStirling:
    def test_alpha_quarter_for_r2(self):
        params = asy.stirling_params(Progression(1, 2), 10)
        assert params.alpha == pytest.approx(0.25, abs=1e-15)

    def test_mu_is_un_over_r(self):
        for n in (0, 5, 123):
            params = asy.stirling_params(Progression(1, 2), n)
            assert params.mu == pytest.approx((2 * n + 1) / 2, rel=1e-15)

    def test_defining_identity(self):
        for u0, r in ((1, 2), (5, 3), (11, 6)):
            for n in (0, 1, 10, 1000):
                p = asy.stirling_params(Progression(u0, r), n)
                lhs = (p.alpha + 1) * (n - p.k_tilde + 1)
                assert lhs == pytest.approx(p.mu, rel=1e-12)

    def test_log_bound_finite_and_below_exact(self):
        prog = Progression(1, 3)
        n = 2000
        slb = asy.stirling_log_bound(prog, n)
        assert math.isfinite(slb)
        assert slb < asy.high_precision_log(lcm_value(prog, n))

    def test_ktilde_negative_for_large_u0_but_defined(self):
        # k_tilde < 0 when u0 dominates n; the identity keeps n-k_tilde+1 > 0,
        # so the Stirling form still evaluates.
        params = asy.stirling_params(Progression(11, 2), 0)
        assert params.k_tilde < -3
        assert math.isfinite(asy.stirling_log_bound(Progression(11, 2), 0))


class TestExpPart:
    def test_r2_collapses_to_log5(self):
        assert asy.exppart_per_n_log(2) == pytest.approx(math.log(5), abs=1e-12)

    def test_large_prime_tends_to_log_r(self):
        r = 10**4 + 7
        assert abs(asy.exppart_per_n_log(r) - math.log(r)) < 0.01

    def test_r3_within_unit_of_log3(self):
        v = asy.exppart_per_n_log(3)
        assert math.log(3) < v < math.log(3) + 1

    def test_r_one_rejected(self):
        with pytest.raises(ValueError):
            asy.exppart_per_n_log(1)


class TestGammaGapReport:
    def test_fields_at_moderate_n(self):
        rep = asy.gamma_gap_report(Progression(1, 2), 200)
        assert rep.step2_exact is True
        assert rep.exact_log_lcm == pytest.approx(
            asy.high_precision_log(lcm_value(Progression(1, 2), 200)), abs=1e-9
        )
        assert rep.step2_sum == pytest.approx(rep.exact_log_lcm, abs=1e-6)
        assert rep.step4_main_term == rep.step3_main_term
        assert rep.gap_per_n is not None and rep.gap_per_n > 0

    def test_n_zero_flags_gap(self):
        rep = asy.gamma_gap_report(Progression(1, 2), 0)
        assert rep.gap_per_n is None

    def test_composite_r_rejected(self):
        with pytest.raises(ValueError):
            asy.gamma_gap_report(Progression(1, 4), 10)

    def test_linear_term(self):
        rep = asy.gamma_gap_report(Progression(1, 3), 5)
        assert rep.linear_term_per_n == pytest.approx(3 * 1.5 / 2)


class TestHighPrecisionLog:
    def test_power_of_two(self):
        assert asy.high_precision_log(2**64) == pytest.approx(64 * math.log(2), rel=1e-15)

    def test_matches_math_log_for_big_ints(self):
        x = 3**4000 + 12345
        assert asy.high_precision_log(x) == pytest.approx(math.log(x), rel=1e-13)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            asy.high_precision_log(0)

"""Acceptance suite: the exit criteria for the whole package.

Each test sweeps its documented grid at the stated tolerance and prints one
PASS/FAIL line (run pytest with -s to watch them stream).  Grids are the
full sizes, not the shrunk quick-mode ones.
"""

import math
import time
from fractions import Fraction

from lcmbounds import asymptotics as asy
from lcmbounds import bounds as bd
from lcmbounds import number_theory as nt
from lcmbounds import verification as vf
from lcmbounds.progression import Progression, a_value, lcm_value


def _report(num: int, name: str, ok: bool, started: float, budget: float, detail: str = ""):
    elapsed = time.perf_counter() - started
    tail = f" [{elapsed:.1f}s]" + (f" {detail}" if detail else "")
    print(f"ACCEPTANCE {num:02d} {name}: {'PASS' if ok else 'FAIL'}{tail}")
    assert ok, f"criterion {num} ({name}) failed {detail}"
    assert elapsed < budget, f"criterion {num} exceeded its {budget:.0f}s budget: {elapsed:.1f}s"


def test_01_quotient_integrality_grid():
    t0 = time.perf_counter()
    res = vf.check_quotient_integrality(u0_max=12, r_max=6, n_max=40)
    api = vf.check_a_value_api_consistency()
    ok = res.passed and api.passed and res.points == 39560
    _report(1, "quotient-integrality", ok, t0, 120, f"{res.points} points")


def test_02_factorial_valuation_grid():
    t0 = time.perf_counter()
    divides = vf.check_factorial_valuation_divides(30, 200)
    order = vf.check_factorial_valuation_order(30, 200)
    prime = vf.check_factorial_valuation_prime(30, 200)
    ok = divides.passed and order.passed and prime.passed
    detail = f"{divides.points}+{order.points}+{prime.points} points"
    _report(2, "factorial-valuation", ok, t0, 60, detail)


def test_03_bound_validity_grid_with_equality_witness():
    t0 = time.perf_counter()
    res = vf.check_bound_validity(u0_max=12, r_max=6, n_max=60)
    witness = bd.bound_multi_prime(Progression(3, 4), 3, 0)
    target = lcm_value(Progression(3, 4), 3)
    ok = res.passed and target == 1155 and bd.exact_compare(witness, target) == 0
    _report(3, "bound-validity", ok, t0, 300, f"{res.points} points, witness 1155 exact")


def test_04_prime_r_agreement_kstar_unimodality():
    t0 = time.perf_counter()
    agree = vf.check_prime_r_agreement(u0_max=12, n_max=40)
    near = vf.check_kstar_matches_argmax(u0_max=12, r_max=6, n_max=60)
    unimodal = vf.check_single_r_unimodality(u0_max=12, r_max=6, n_max=60)
    ok = agree.passed and near.passed and unimodal.passed
    _report(4, "prime-r-agreement-and-k-star", ok, t0, 300)


def test_05_binomial_form_adjudication():
    t0 = time.perf_counter()
    res = vf.check_binomial_adjudication(u0_max=12, r_max=6, n_max=40)
    # the hand-checked point: compact form gives 3/2 where the direct bound is 3
    printed = bd.bound_binomial(Progression(1, 2), 1, 0)
    single = bd.bound_single_r(Progression(1, 2), 1, 0)
    spot = (
        printed.mantissa * Fraction(2) ** int(printed.exponent) == Fraction(3, 2)
        and single.mantissa * Fraction(2) ** int(single.exponent) == 3
    )
    ok = res.passed and spot
    _report(
        5,
        "binomial-form-adjudication",
        ok,
        t0,
        300,
        f"uniformly single_r / r on {res.points} points",
    )


def test_06_sharpness_with_engineered_u0():
    t0 = time.perf_counter()
    ok = True
    detail = ""
    for n in range(2, 21):
        u0 = nt.coprime_part(math.lcm(*range(1, n + 1)), 2)
        prog = Progression(u0, 2)
        target = lcm_value(prog, n)
        a = a_value(prog, n, 0)
        if a != 2 ** nt.legendre_valuation(2, n):
            ok, detail = False, f"A mismatch at n={n}"
            break
        scaled = bd.scale_bound(bd.bound_large_u0(prog, n, corrected=True), n + 1)
        if bd.exact_compare(scaled, target) < 0:
            ok, detail = False, f"ratio above n+1 at n={n}"
            break
    _report(6, "sharpness-engineered-u0", ok, t0, 120, detail or "n in [2, 20]")


def test_07_residue_class_reconstruction():
    t0 = time.perf_counter()
    res = vf.check_step2_reconstruction(n_max=200)
    ok = res.passed and res.points > 900  # plenty of exact points exercised
    _report(7, "residue-class-reconstruction", ok, t0, 120, f"{res.points} exact points")


def test_08_main_term_convergence():
    t0 = time.perf_counter()
    res = vf.check_main_term_convergence(n_near=500, n_far=5000)
    _report(8, "main-term-convergence", res.passed, t0, 60)


def test_09_stirling_identities():
    t0 = time.perf_counter()
    log5_exact = abs(asy.exppart_per_n_log(2) - math.log(5)) < 1e-9
    identity = vf.check_stirling_identity(u0_max=12, r_max=6)
    accuracy = vf.check_stirling_accuracy(n=5000, tolerance=0.05)
    ok = log5_exact and identity.passed and accuracy.passed
    _report(9, "stirling-identities", ok, t0, 120)


def test_10_gamma_gap():
    t0 = time.perf_counter()
    h100 = nt.harmonic(100)
    linear_gap = float(Fraction(101) * h100 / 100) - math.log(101) - asy.EULER_GAMMA
    r101_ok = 0 < linear_gap < 0.10
    rep = asy.gamma_gap_report(Progression(1, 2), 2000)
    target = 2 - math.log(5)
    gap_ok = rep.gap_per_n is not None and abs(rep.gap_per_n - target) < 0.02
    ok = r101_ok and gap_ok
    detail = f"linear gap {linear_gap:.4f}, per-n gap {rep.gap_per_n:.4f} vs {target:.4f}"
    _report(10, "gamma-gap", ok, t0, 120, detail)


def test_11_prior_baseline_comparison():
    t0 = time.perf_counter()
    exact_value = bd.exact_compare(
        bd.bound_tan_hong_optimized(Progression(1, 2), 12), 4251528
    ) == 0
    dominance = vf.check_tan_hong_dominance(n=1000)
    ok = exact_value and dominance.passed
    _report(11, "prior-baseline-comparison", ok, t0, 120)

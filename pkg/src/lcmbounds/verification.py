"""Property grids behind the ``verify`` subcommand.

Each check sweeps a documented default grid and reports the first few
offending tuples, so a failure always comes with a minimal reproduction.
The same functions back the acceptance test suite.

Default grids (full mode):

* exact checks: u0 <= 12, r <= 6 over gcd-1 pairs, n <= 40 (bounds: n <= 60)
* valuations: s in [2, 30], m in [0, 200]; digit sums up to m = 10^4
* asymptotic spot checks: n up to 5000, k_tilde sweep n <= 10^4

``quick=True`` shrinks every grid to finish in well under a minute.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import asymptotics, bounds, number_theory, progression
from .bounds import (
    VARIANTS,
    bound_multi_prime,
    bound_single_r,
    bound_tan_hong_optimized,
    bound_variant,
    compare_bounds,
    exact_compare,
    k_argmax,
    k_star,
)
from .progression import Progression, a_value, lcm_value, tail_lcms

MAX_REPORTED_FAILURES = 5


@dataclass
class CheckResult:
    name: str
    passed: bool
    points: int
    failures: list[tuple] = field(default_factory=list)
    note: str = ""

    def record(self, failure: tuple) -> None:
        self.passed = False
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(failure)


def gcd1_progressions(u0_max: int = 12, r_max: int = 6, *, r_min: int = 1) -> list[Progression]:
    """Every progression with u0 <= u0_max, r_min <= r <= r_max, gcd(u0, r) = 1."""
    out = []
    for r in range(r_min, r_max + 1):
        for u0 in range(1, u0_max + 1):
            if math.gcd(u0, r) == 1:
                out.append(Progression(u0, r))
    return out


# ----------------------------------------------------------------- primitives


def check_factorial_valuation_divides(s_max: int = 30, m_max: int = 200) -> CheckResult:
    """s^lemma_exponent divides m! for every s, m in the grid (big-int check)."""
    res = CheckResult("factorial-valuation-divides", True, 0)
    factorials = [1]
    for m in range(1, m_max + 1):
        factorials.append(factorials[-1] * m)
    for s in range(2, s_max + 1):
        for m in range(0, m_max + 1):
            res.points += 1
            fv = number_theory.factorial_valuation(s, m)
            if factorials[m] % s**fv.lemma_exponent:
                res.record((s, m))
    return res


def check_factorial_valuation_order(s_max: int = 30, m_max: int = 200) -> CheckResult:
    """analytic_floor <= lemma_exponent <= max_exponent across the grid."""
    res = CheckResult("factorial-valuation-order", True, 0)
    for s in range(2, s_max + 1):
        for m in range(0, m_max + 1):
            res.points += 1
            fv = number_theory.factorial_valuation(s, m)
            if not (fv.analytic_floor <= fv.lemma_exponent <= fv.max_exponent):
                res.record((s, m))
    return res


def check_factorial_valuation_prime(s_max: int = 30, m_max: int = 200) -> CheckResult:
    """For prime s: lemma_exponent = (m - digitsum)/(s-1) = max_exponent."""
    res = CheckResult("factorial-valuation-prime-max", True, 0)
    for s in range(2, s_max + 1):
        if not number_theory.is_prime(s):
            continue
        for m in range(0, m_max + 1):
            res.points += 1
            fv = number_theory.factorial_valuation(s, m)
            digit_form = (m - number_theory.digitsum(m, s)) // (s - 1)
            if fv.lemma_exponent != fv.max_exponent or fv.lemma_exponent != digit_form:
                res.record((s, m))
    return res


def check_digitsum_identity(s_max: int = 30, m_max: int = 10_000) -> CheckResult:
    """sum_i floor(m/s^i) == (m - digitsum(m, s)) / (s - 1)."""
    res = CheckResult("digit-sum-identity", True, 0)
    for s in range(2, s_max + 1):
        for m in range(0, m_max + 1):
            res.points += 1
            floor_sum = 0
            q = s
            while q <= m:
                floor_sum += m // q
                q *= s
            d = number_theory.digitsum(m, s)
            if (m - d) % (s - 1) or floor_sum != (m - d) // (s - 1):
                res.record((s, m))
    return res


def check_legendre_upper_bound(p_max: int = 97, m_max: int = 300) -> CheckResult:
    """v_p(m!) <= m / (p - 1), checked without floats: (p-1) * v <= m."""
    res = CheckResult("legendre-upper-bound", True, 0)
    for p in number_theory.sieve(p_max).primes:
        for m in range(0, m_max + 1):
            res.points += 1
            if (p - 1) * number_theory.legendre_valuation(p, m) > m:
                res.record((p, m))
    return res


def check_factorize_roundtrip(limit: int = 100_000) -> CheckResult:
    """factorize then multiply back is the identity on [1, limit]."""
    res = CheckResult("factorize-roundtrip", True, 0)
    for m in range(1, limit + 1):
        res.points += 1
        f = number_theory.factorize(m)
        if f.reconstruct() != m:
            res.record((m,))
        elif any(e < 1 for _, e in f.factors):
            res.record((m,))
        elif [p for p, _ in f.factors] != sorted(p for p, _ in f.factors):
            res.record((m,))
    return res


# ---------------------------------------------------------------- progression


def check_quotient_integrality(u0_max: int = 12, r_max: int = 6, n_max: int = 40) -> CheckResult:
    """A(n,k) = lcm / C is a positive integer on the whole grid."""
    res = CheckResult("quotient-integrality", True, 0)
    for prog in gcd1_progressions(u0_max, r_max):
        for n in range(1, n_max + 1):
            tails = tail_lcms(prog, n)
            product = 1
            fact = [math.factorial(i) for i in range(n + 1)]
            for k in range(n, -1, -1):
                product *= prog.term(k)
                res.points += 1
                quotient, remainder = divmod(tails[k] * fact[n - k], product)
                if remainder or quotient < 1:
                    res.record((prog.u0, prog.r, n, k))
    return res


def check_a_value_api_consistency(samples: Iterable[tuple[int, int, int, int]] = ()) -> CheckResult:
    """Route check: the a_value API agrees with the batched grid arithmetic."""
    res = CheckResult("a-value-api", True, 0)
    points = list(samples) or [
        (1, 2, 4, 0),
        (3, 4, 3, 0),
        (5, 3, 12, 4),
        (11, 6, 20, 7),
        (7, 5, 17, 17),
    ]
    for u0, r, n, k in points:
        res.points += 1
        prog = Progression(u0, r)
        direct = a_value(prog, n, k)
        batched, rem = divmod(
            tail_lcms(prog, n)[k] * math.factorial(n - k),
            math.prod(prog.term(j) for j in range(k, n + 1)),
        )
        if rem or direct != batched:
            res.record((u0, r, n, k))
    return res


def check_c_denominator_smooth(u0_max: int = 12, r_max: int = 6, n_max: int = 40) -> CheckResult:
    """The denominator of C(n,k) has no prime factor outside r.

    This is the provable prime-support fact (for q not dividing r, the terms
    u_k..u_n contain at least as many factors of q as (n-k)! does); the
    integer quotient A is the one that may pick up extra primes.
    """
    res = CheckResult("c-denominator-r-smooth", True, 0)
    for prog in gcd1_progressions(u0_max, r_max):
        for n in range(1, n_max + 1):
            for k in range(0, n + 1):
                res.points += 1
                den = progression.c_value(prog, n, k).denominator
                if number_theory.coprime_part(den, prog.r) != 1:
                    res.record((prog.u0, prog.r, n, k))
    return res


def check_a_prime_support(u0_max: int = 12, r_max: int = 6, n_max: int = 40) -> CheckResult:
    """Probe whether every prime factor of A(n,k) divides r (r >= 2).

    Informational: counterexamples exist (the smallest is u0=1, r=2, n=3,
    k=0 with A = 6) and are expected, because extra factors enter A whenever
    one of the tail divisibility conditions fails.  They are flagged in the
    note, never treated as a failure.
    """
    res = CheckResult("a-value-prime-support", True, 0)
    extra: list[tuple] = []
    for prog in gcd1_progressions(u0_max, r_max, r_min=2):
        for n in range(1, n_max + 1):
            for k in range(0, n + 1):
                res.points += 1
                a = a_value(prog, n, k)
                if number_theory.coprime_part(a, prog.r) != 1:
                    if len(extra) < MAX_REPORTED_FAILURES:
                        extra.append((prog.u0, prog.r, n, k, a))
    if extra:
        res.note = f"A carries primes outside r at {len(extra)}+ points, first {extra[0]}"
    return res


def check_a_smooth_divisor(u0_max: int = 12, r_max: int = 6, n_max: int = 40) -> CheckResult:
    """A(n,k) is divisible by prod over p | r of p^(v_p((n-k)!))."""
    res = CheckResult("a-value-smooth-divisor", True, 0)
    for prog in gcd1_progressions(u0_max, r_max, r_min=2):
        prime_list = [p for p, _ in number_theory.factorize(prog.r).factors]
        for n in range(1, n_max + 1):
            for k in range(0, n + 1):
                res.points += 1
                smooth = math.prod(
                    p ** number_theory.legendre_valuation(p, n - k) for p in prime_list
                )
                if a_value(prog, n, k) % smooth:
                    res.record((prog.u0, prog.r, n, k))
    return res


def check_tail_lcm_divides_next(u0_max: int = 12, r_max: int = 6, n_max: int = 40) -> CheckResult:
    """L(n,k) divides L(n+1,k): the term set only grows."""
    res = CheckResult("tail-lcm-divides-next", True, 0)
    for prog in gcd1_progressions(u0_max, r_max):
        previous = None
        for n in range(0, n_max + 1):
            current = tail_lcms(prog, n)
            if previous is not None:
                for k in range(0, n):
                    res.points += 1
                    if current[k] % previous[k]:
                        res.record((prog.u0, prog.r, n, k))
            previous = current
    return res


# --------------------------------------------------------------------- bounds


def _applicable_variants(r: int) -> tuple[str, ...]:
    return VARIANTS if r >= 2 else ("multi_prime",)


def check_bound_validity(u0_max: int = 12, r_max: int = 6, n_max: int = 60) -> CheckResult:
    """Every variant stays <= the exact lcm, verified by exact comparison."""
    res = CheckResult("bound-validity", True, 0)
    for prog in gcd1_progressions(u0_max, r_max):
        target = prog.u0
        for n in range(0, n_max + 1):
            if n > 0:
                target = math.lcm(target, prog.term(n))
            for variant in _applicable_variants(prog.r):
                ctor = bound_variant(variant)
                for k in range(0, n + 1):
                    res.points += 1
                    if exact_compare(ctor(prog, n, k), target) > 0:
                        res.record((prog.u0, prog.r, n, k, variant))
    return res


def check_prime_r_agreement(u0_max: int = 12, n_max: int = 40) -> CheckResult:
    """For r in {2, 3, 5} the multi-prime and single-modulus bounds coincide."""
    res = CheckResult("prime-r-agreement", True, 0)
    for r in (2, 3, 5):
        for u0 in range(1, u0_max + 1):
            if math.gcd(u0, r) != 1:
                continue
            prog = Progression(u0, r)
            for n in range(0, n_max + 1):
                for k in range(0, n + 1):
                    res.points += 1
                    if bound_multi_prime(prog, n, k) != bound_single_r(prog, n, k):
                        res.record((u0, r, n, k))
    return res


def check_multi_dominates_single(u0_max: int = 12, n_max: int = 40) -> CheckResult:
    """For composite r the multi-prime bound is at least the single-modulus one."""
    res = CheckResult("multi-dominates-single", True, 0)
    for r in (4, 6):
        for u0 in range(1, u0_max + 1):
            if math.gcd(u0, r) != 1:
                continue
            prog = Progression(u0, r)
            for n in range(0, n_max + 1):
                for k in range(0, n + 1):
                    res.points += 1
                    if compare_bounds(bound_multi_prime(prog, n, k), bound_single_r(prog, n, k)) < 0:
                        res.record((u0, r, n, k))
    return res


def check_single_r_unimodality(u0_max: int = 12, r_max: int = 6, n_max: int = 60) -> CheckResult:
    """k -> single-modulus bound has no strict interior local minimum."""
    res = CheckResult("single-r-unimodal", True, 0)
    for prog in gcd1_progressions(u0_max, r_max, r_min=2):
        for n in range(2, n_max + 1):
            values = [bound_single_r(prog, n, k) for k in range(0, n + 1)]
            steps = [compare_bounds(values[k + 1], values[k]) for k in range(n)]
            res.points += 1
            # a strict local min at interior k means a down step into k and an up step out
            for k in range(1, n):
                if steps[k - 1] < 0 and steps[k] > 0:
                    res.record((prog.u0, prog.r, n, k))
                    break
    return res


def check_kstar_matches_argmax(u0_max: int = 12, r_max: int = 6, n_max: int = 60) -> CheckResult:
    """|k_star - brute-force argmax of the single-modulus bound| <= 1."""
    res = CheckResult("k-star-matches-argmax", True, 0)
    for prog in gcd1_progressions(u0_max, r_max, r_min=2):
        for n in range(0, n_max + 1):
            res.points += 1
            if abs(k_star(prog, n) - k_argmax(prog, n, "single_r")) > 1:
                res.record((prog.u0, prog.r, n))
    return res


def check_factor_growth(n_max: int = 60, p_max: int = 13) -> CheckResult:
    """p^((n-k)/(p-1)) / (n-k+1) >= 1 once n-k >= p-1 (root cleared exactly)."""
    res = CheckResult("per-prime-factor-growth", True, 0)
    for p in number_theory.sieve(p_max).primes:
        for m in range(p - 1, n_max + 1):  # m plays n-k
            res.points += 1
            if p**m < (m + 1) ** (p - 1):
                res.record((p, m))
    return res


def check_binomial_adjudication(u0_max: int = 12, r_max: int = 6, n_max: int = 40) -> CheckResult:
    """The compact binomial form equals single_r / r at every grid point.

    Checked with exact rationals: same base r, exponents differ by the
    integer n-k+1, so the comparison needs no root clearing.
    """
    res = CheckResult("binomial-is-single-over-r", True, 0)
    for prog in gcd1_progressions(u0_max, r_max, r_min=2):
        r = prog.r
        for n in range(0, n_max + 1):
            for k in range(0, n + 1):
                res.points += 1
                printed = bounds.bound_binomial(prog, n, k)
                single = bound_single_r(prog, n, k)
                if printed.mantissa * Fraction(r) ** (n - k + 1) != single.mantissa:
                    res.record((prog.u0, prog.r, n, k))
    return res


def check_tan_hong_dominance(n: int = 1000) -> CheckResult:
    """At n = 1000 and r in {2, 3} the new bound beats the optimized baseline."""
    res = CheckResult("dominates-prior-baseline", True, 0)
    for r in (2, 3):
        res.points += 1
        prog = Progression(1, r)
        best = bound_single_r(prog, n, k_argmax(prog, n, "single_r"))
        baseline = bound_tan_hong_optimized(prog, n)
        if compare_bounds(best, baseline) <= 0:
            res.record((1, r, n))
    return res


# ---------------------------------------------------------------- asymptotics

STEP2_PROGRESSIONS = ((1, 2), (1, 3), (2, 3), (3, 4), (9, 2))


def check_mangoldt_reconstruction(n_max: int = 200) -> CheckResult:
    """The prime-power enumeration rebuilds L_n exactly (an identity)."""
    res = CheckResult("mangoldt-rebuilds-lcm", True, 0)
    for u0, r in STEP2_PROGRESSIONS:
        prog = Progression(u0, r)
        target = u0
        for n in range(0, n_max + 1):
            if n > 0:
                target = math.lcm(target, prog.term(n))
            res.points += 1
            if asymptotics.log_lcm_via_mangoldt(prog, n).reconstruction != target:
                res.record((u0, r, n))
    return res


def check_step2_reconstruction(n_max: int = 200) -> CheckResult:
    """Whenever the exactness predicate holds, the residue-class enumeration
    rebuilds L_n exactly."""
    res = CheckResult("residue-class-rebuilds-lcm", True, 0)
    for u0, r in STEP2_PROGRESSIONS:
        prog = Progression(u0, r)
        target = u0
        for n in range(0, n_max + 1):
            if n > 0:
                target = math.lcm(target, prog.term(n))
            if not asymptotics.step2_exactness(prog, n):
                continue
            res.points += 1
            if asymptotics.step2_characterization(prog, n).reconstruction != target:
                res.record((u0, r, n))
    return res


def check_step3_equals_step4(u0_max: int = 12, n_max: int = 60) -> CheckResult:
    """The unit-sum and harmonic forms of the main term agree for prime r."""
    res = CheckResult("main-term-prime-forms-agree", True, 0)
    for r in (2, 3, 5):
        for u0 in range(1, u0_max + 1):
            if math.gcd(u0, r) != 1:
                continue
            prog = Progression(u0, r)
            for n in (0, 1, n_max):
                res.points += 1
                a = asymptotics.step3_main_term(prog, n)
                b = asymptotics.step4_main_term(prog, n)
                if a != b:
                    res.record((u0, r, n))
    return res


def check_main_term_convergence(n_near: int = 500, n_far: int = 5000) -> CheckResult:
    """exact log / main term is within 10% of 1 at n_far and closer than at n_near."""
    res = CheckResult("main-term-convergence", True, 0)
    for r in (2, 3):
        res.points += 1
        prog = Progression(1, r)
        devs = []
        for n in (n_near, n_far):
            exact = asymptotics.high_precision_log(lcm_value(prog, n))
            devs.append(abs(exact / asymptotics.step3_main_term(prog, n) - 1))
        if devs[1] >= 0.10 or devs[1] >= devs[0]:
            res.record((1, r, n_near, n_far, round(devs[0], 6), round(devs[1], 6)))
    return res


def check_stirling_identity(u0_max: int = 12, r_max: int = 6) -> CheckResult:
    """(alpha+1)(n - k_tilde + 1) = mu to 1e-9 relative across the grid."""
    res = CheckResult("stirling-identity", True, 0)
    n_values = list(range(0, 101)) + [1000, 10_000]
    for prog in gcd1_progressions(u0_max, r_max, r_min=2):
        for n in n_values:
            res.points += 1
            p = asymptotics.stirling_params(prog, n)  # raises IntegrityError on violation
            lhs = (p.alpha + 1) * (n - p.k_tilde + 1)
            if abs(lhs - p.mu) > 1e-9 * max(1.0, abs(p.mu)):
                res.record((prog.u0, prog.r, n))
    return res


def check_ktilde_near_kstar(
    u0_max: int = 12, r_max: int = 6, n_max: int = 10_000, stride: int = 1
) -> CheckResult:
    """max(0, k_tilde) stays within 3 of k_star over the whole grid.

    k_tilde is clamped into the valid index range exactly like k_star; the
    raw value dips below 0 for u0 large relative to n, where both optima sit
    at the boundary.
    """
    res = CheckResult("k-tilde-near-k-star", True, 0)
    for prog in gcd1_progressions(u0_max, r_max, r_min=2):
        for n in range(0, n_max + 1, stride):
            res.points += 1
            clamped = max(0.0, asymptotics.stirling_params(prog, n).k_tilde)
            if abs(clamped - k_star(prog, n)) > 3:
                res.record((prog.u0, prog.r, n))
    return res


def check_stirling_accuracy(n: int = 5000, tolerance: float = 0.05) -> CheckResult:
    """Log of the exact binomial-form bound at k = round(k_tilde) stays within
    ``tolerance`` of the Stirling asymptotic at large n."""
    res = CheckResult("stirling-matches-exact-bound", True, 0)
    for r in (2, 3):
        res.points += 1
        prog = Progression(1, r)
        k = round(asymptotics.stirling_params(prog, n).k_tilde)
        exact_log = bounds.bound_binomial(prog, n, k).log_value
        if abs(exact_log - asymptotics.stirling_log_bound(prog, n)) >= tolerance:
            res.record((1, r, n))
    return res


# --------------------------------------------------------------------- runner


def _fault_check() -> CheckResult:
    """Deliberately broken check used to self-test failure reporting."""
    res = CheckResult("self-test-injected-fault", True, 0)
    prog = Progression(1, 2)
    res.points += 1
    # claims the k=0 bound reaches the lcm itself, which is false at n=4
    if exact_compare(bound_multi_prime(prog, 4, 0), lcm_value(prog, 4)) != 0:
        res.record((1, 2, 4, 0))
    return res


def all_checks(quick: bool = False) -> list[tuple[str, Callable[[], CheckResult]]]:
    """The registry: (name, runner) per property, grids shrunk when quick."""
    if quick:
        return [
            ("factorial-valuation-divides", lambda: check_factorial_valuation_divides(12, 60)),
            ("factorial-valuation-order", lambda: check_factorial_valuation_order(12, 60)),
            ("factorial-valuation-prime-max", lambda: check_factorial_valuation_prime(12, 60)),
            ("digit-sum-identity", lambda: check_digitsum_identity(12, 1500)),
            ("legendre-upper-bound", lambda: check_legendre_upper_bound(31, 120)),
            ("factorize-roundtrip", lambda: check_factorize_roundtrip(20_000)),
            ("quotient-integrality", lambda: check_quotient_integrality(8, 6, 16)),
            ("a-value-api", check_a_value_api_consistency),
            ("c-denominator-r-smooth", lambda: check_c_denominator_smooth(8, 6, 16)),
            ("a-value-prime-support", lambda: check_a_prime_support(8, 6, 12)),
            ("a-value-smooth-divisor", lambda: check_a_smooth_divisor(8, 6, 12)),
            ("tail-lcm-divides-next", lambda: check_tail_lcm_divides_next(8, 6, 16)),
            ("bound-validity", lambda: check_bound_validity(8, 6, 20)),
            ("prime-r-agreement", lambda: check_prime_r_agreement(8, 16)),
            ("multi-dominates-single", lambda: check_multi_dominates_single(8, 16)),
            ("single-r-unimodal", lambda: check_single_r_unimodality(8, 6, 20)),
            ("k-star-matches-argmax", lambda: check_kstar_matches_argmax(8, 6, 24)),
            ("per-prime-factor-growth", lambda: check_factor_growth(40, 7)),
            ("binomial-is-single-over-r", lambda: check_binomial_adjudication(8, 6, 16)),
            ("dominates-prior-baseline", lambda: check_tan_hong_dominance(300)),
            ("mangoldt-rebuilds-lcm", lambda: check_mangoldt_reconstruction(60)),
            ("residue-class-rebuilds-lcm", lambda: check_step2_reconstruction(60)),
            ("main-term-prime-forms-agree", lambda: check_step3_equals_step4(8, 30)),
            ("main-term-convergence", lambda: check_main_term_convergence(300, 1500)),
            ("stirling-identity", lambda: check_stirling_identity(8, 6)),
            ("k-tilde-near-k-star", lambda: check_ktilde_near_kstar(8, 6, 1000, 13)),
            ("stirling-matches-exact-bound", lambda: check_stirling_accuracy(1500, 0.05)),
        ]
    return [
        ("factorial-valuation-divides", check_factorial_valuation_divides),
        ("factorial-valuation-order", check_factorial_valuation_order),
        ("factorial-valuation-prime-max", check_factorial_valuation_prime),
        ("digit-sum-identity", check_digitsum_identity),
        ("legendre-upper-bound", check_legendre_upper_bound),
        ("factorize-roundtrip", check_factorize_roundtrip),
        ("quotient-integrality", check_quotient_integrality),
        ("a-value-api", check_a_value_api_consistency),
        ("c-denominator-r-smooth", check_c_denominator_smooth),
        ("a-value-prime-support", check_a_prime_support),
        ("a-value-smooth-divisor", check_a_smooth_divisor),
        ("tail-lcm-divides-next", check_tail_lcm_divides_next),
        ("bound-validity", check_bound_validity),
        ("prime-r-agreement", check_prime_r_agreement),
        ("multi-dominates-single", check_multi_dominates_single),
        ("single-r-unimodal", check_single_r_unimodality),
        ("k-star-matches-argmax", check_kstar_matches_argmax),
        ("per-prime-factor-growth", check_factor_growth),
        ("binomial-is-single-over-r", check_binomial_adjudication),
        ("dominates-prior-baseline", check_tan_hong_dominance),
        ("mangoldt-rebuilds-lcm", check_mangoldt_reconstruction),
        ("residue-class-rebuilds-lcm", check_step2_reconstruction),
        ("main-term-prime-forms-agree", check_step3_equals_step4),
        ("main-term-convergence", check_main_term_convergence),
        ("stirling-identity", check_stirling_identity),
        ("k-tilde-near-k-star", check_ktilde_near_kstar),
        ("stirling-matches-exact-bound", check_stirling_accuracy),
    ]


def run_checks(
    quick: bool = False,
    only: str = "",
    inject_fault: bool = False,
) -> list[CheckResult]:
    """Run the registered checks (name filtered by substring ``only``)."""
    registry = all_checks(quick)
    if inject_fault:
        registry = registry + [("self-test-injected-fault", _fault_check)]
    results = []
    for name, runner in registry:
        if only and only not in name:
            continue
        results.append(runner())
    return results

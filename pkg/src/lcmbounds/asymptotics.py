"""Large-n behavior of log lcm(u_0, ..., u_n).

Three layers live here:

1. The von Mangoldt characterization: log L_n is the sum of log p over prime
   powers dividing some term, and the same enumeration rebuilds L_n as an
   exact integer (an identity, verified as such).
2. A residue-class refinement of that sum over the units modulo r, exact as
   soon as every positive integer below u0 in the progression's residue class
   divides L_n (an explicit, checkable predicate, not an n threshold).
3. Main-term asymptotics and the Stirling form of the binomial lower bound,
   including the per-n log of its exponential part.

The boundary convention in layer 2 is closed: a prime power d counts when
its smallest positive multiple in the residue class, d * l_d, is <= u_n.
With a strict inequality the rebuilt integer drops prime powers that land
exactly on u_n (witness: u0=1, r=2, n=1, d=3) and the identity fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .errors import IntegrityError, ResourceLimitError
from .number_theory import euler_phi, harmonic, is_prime, shared_table
from .progression import Progression, lcm_value

#: Euler-Mascheroni constant, 20 digits (rounds to the nearest double).
EULER_GAMMA = 0.57721566490153286061

#: Default ceiling for the prime-power enumeration bound u_n.
DEFAULT_SIEVE_CAP = 2_000_000


@dataclass(frozen=True)
class MangoldtCharacterization:
    """A prime-power sum for log L_n plus its exact integer rebuild."""

    log_sum: float
    reconstruction: int


@dataclass(frozen=True)
class StirlingParams:
    """The real-valued shift k_tilde and the Stirling parameters alpha, mu.

    alpha = r^(-r/(r-1)) and mu = u_n / r; k_tilde is pinned by the identity
    (alpha + 1) * (n - k_tilde + 1) = mu, which makes the term ratio of the
    binomial in the bound exactly 1 + alpha.
    """

    k_tilde: float
    alpha: float
    mu: float


@dataclass(frozen=True)
class AsymptoticsReport:
    """Exact log lcm next to every asymptotic prediction for one n."""

    n: int
    exact_log_lcm: float
    step2_sum: float
    step2_exact: bool
    step3_main_term: float
    step4_main_term: Optional[float]
    stirling_log_bound: float
    exppart_per_n_log: float
    linear_term_per_n: float
    gap_per_n: Optional[float]


def high_precision_log(x: int) -> float:
    """Natural log of a (possibly huge) positive integer via 40-digit interim
    precision; the rounding of the final double is the only error left."""
    if x <= 0:
        raise ValueError("x must be positive")
    with mpmath.workdps(40):
        return float(mpmath.log(mpmath.mpf(x)))


def _check_cap(u_n: int, sieve_cap: int) -> None:
    if u_n > sieve_cap:
        raise ResourceLimitError(
            f"u_n = {u_n} exceeds the prime-power sieve cap {sieve_cap}"
        )


def _characterize(prog: Progression, u_n: int, include) -> MangoldtCharacterization:
    """Fold a prime-power membership predicate into (log sum, exact rebuild).

    For each prime p not dividing r, the included powers form an unbroken
    run p, p^2, ..., p^best (a power divides whatever its square divides),
    so the log sum per prime is best * log p and the rebuild multiplies in
    p^best.
    """
    table = shared_table(u_n)
    logs = []
    reconstruction = 1
    for p in table.primes:
        if p > u_n:
            break
        if prog.r % p == 0:
            continue  # p | r never divides any term (gcd(u0, r) = 1)
        best = 0
        d, j = p, 1
        while d <= u_n:
            if include(d):
                best = j
            d *= p
            j += 1
        if best:
            logs.append(best * math.log(p))
            reconstruction *= p**best
    return MangoldtCharacterization(log_sum=math.fsum(logs), reconstruction=reconstruction)


def log_lcm_via_mangoldt(
    prog: Progression, n: int, *, sieve_cap: int = DEFAULT_SIEVE_CAP
) -> MangoldtCharacterization:
    """Sum log p over prime powers d <= u_n dividing some term u_k, k <= n.

    d divides some term iff p does not divide r and the first index
    k0 = -u0 * r^(-1) mod d is <= n.  The rebuilt integer (product of the
    largest included power per prime) always equals L_n exactly.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    u_n = prog.term(n)
    _check_cap(u_n, sieve_cap)
    u0, r = prog.u0, prog.r

    def divides_some_term(d: int) -> bool:
        return (-u0 * pow(r, -1, d)) % d <= n

    return _characterize(prog, u_n, divides_some_term)


def smallest_class_multiple(d: int, prog: Progression) -> int:
    """d * l_d: the smallest positive integer divisible by d and congruent to
    u0 modulo r.  Requires gcd(d, r) = 1 and r >= 2."""
    ld = prog.u0 * pow(d, -1, prog.r) % prog.r
    return d * ld


def step2_characterization(
    prog: Progression, n: int, *, sieve_cap: int = DEFAULT_SIEVE_CAP
) -> MangoldtCharacterization:
    """The residue-class form: sum over units l mod r of sum of log p over
    prime powers d in the class of u0/d with d * l_d <= u_n (closed bound).

    Agrees with log_lcm_via_mangoldt, and its rebuilt integer equals L_n,
    exactly when step2_exactness holds.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if prog.r < 2:
        raise ValueError("the residue-class characterization needs r >= 2")
    u_n = prog.term(n)
    _check_cap(u_n, sieve_cap)
    return _characterize(prog, u_n, lambda d: smallest_class_multiple(d, prog) <= u_n)


def step2_sum(prog: Progression, n: int, *, sieve_cap: int = DEFAULT_SIEVE_CAP) -> float:
    """The log-space value of the residue-class characterization."""
    return step2_characterization(prog, n, sieve_cap=sieve_cap).log_sum


def step2_exactness(prog: Progression, n: int) -> bool:
    """True iff every positive m < u0 with m = u0 (mod r) divides L_n.

    This is the exact hypothesis under which the residue-class sum equals
    log L_n; it replaces any vague notion of "n large enough".
    """
    target = lcm_value(prog, n)
    m = prog.u0 - prog.r
    while m > 0:
        if target % m:
            return False
        m -= prog.r
    return True


def step3_main_term(prog: Progression, n: int) -> float:
    """(u_n / phi(r)) * sum of 1/l over units l mod r, the main term of log L_n."""
    if prog.r < 2:
        raise ValueError("main term needs r >= 2")
    r = prog.r
    unit_sum = sum(Fraction(1, ell) for ell in range(1, r) if math.gcd(ell, r) == 1)
    return float(Fraction(prog.term(n)) * unit_sum / euler_phi(r))


def step4_main_term(prog: Progression, n: int) -> float:
    """u_n * H_{r-1} / (r-1), the prime-r specialization of the main term."""
    r = prog.r
    if not is_prime(r):
        raise ValueError("the harmonic form of the main term needs r prime")
    return float(Fraction(prog.term(n)) * harmonic(r - 1) / (r - 1))


def stirling_params(prog: Progression, n: int) -> StirlingParams:
    """k_tilde = 1 + n/(r^(r/(r-1)) + 1) - u0/(r(r^(-r/(r-1)) + 1)), alpha, mu.

    The defining relation (alpha+1)(n - k_tilde + 1) = mu is asserted to
    1e-9 relative; it holds algebraically, so a violation means a broken
    formula rather than a bad input.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if prog.r < 2:
        raise ValueError("Stirling parameters need r >= 2")
    r = prog.r
    big_r = r ** (r / (r - 1))
    alpha = 1.0 / big_r
    mu = prog.term(n) / r
    k_tilde = 1 + n / (big_r + 1) - prog.u0 / (r * (alpha + 1))
    residual = (alpha + 1) * (n - k_tilde + 1) - mu
    if abs(residual) > 1e-9 * max(1.0, abs(mu)):
        raise IntegrityError(
            f"(alpha+1)(n-k_tilde+1) != mu at (u0={prog.u0}, r={r}, n={n}): residual {residual}"
        )
    return StirlingParams(k_tilde=k_tilde, alpha=alpha, mu=mu)


def stirling_log_bound(prog: Progression, n: int) -> float:
    """Natural log of the Stirling asymptotic of the binomial-form bound:

        r^((n-k_tilde) r/(r-1)) * (1+a)/sqrt(2 pi mu a)
            * ((1+a)^(1/(1+a)) * ((1+a)/a)^(a/(1+a)))^mu

    with a = alpha.  The domain guard (mu > 0 and n - k_tilde + 1 > 0) cannot
    fire for a valid progression, since (alpha+1)(n - k_tilde + 1) = mu > 0
    identically; it is kept as a defensive contract.
    """
    params = stirling_params(prog, n)
    a, mu, k_tilde = params.alpha, params.mu, params.k_tilde
    if mu <= 0 or n - k_tilde + 1 <= 0:
        raise ValueError(f"Stirling form undefined: mu={mu}, n-k_tilde+1={n - k_tilde + 1}")
    r = prog.r
    lead = (n - k_tilde) * (r / (r - 1)) * math.log(r)
    prefactor = math.log(1 + a) - 0.5 * math.log(2 * math.pi * mu * a)
    per_mu = math.log(1 + a) / (1 + a) + (a / (1 + a)) * math.log((1 + a) / a)
    return lead + prefactor + mu * per_mu


def exppart_per_n_log(r: int) -> float:
    """Per-n natural log of the exponential part of the Stirling bound:

        log( r^(r/((1+a)(r-1))) * (1+a)^(1/(1+a)) * ((1+a)/a)^(a/(1+a)) )

    with a = r^(-r/(r-1)).  For r = 2 this collapses exactly to log 5; for
    large r it is log r + O(log r / r).
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    a = r ** (-r / (r - 1))
    value = (r / ((1 + a) * (r - 1))) * math.log(r)
    value += math.log(1 + a) / (1 + a)
    value += (a / (1 + a)) * math.log((1 + a) / a)
    return value


def gamma_gap_report(
    prog: Progression, n: int, *, sieve_cap: int = DEFAULT_SIEVE_CAP
) -> AsymptoticsReport:
    """Assemble exact log L_n against every prediction, for prime r.

    ``linear_term_per_n`` is r * H_{r-1} / (r-1), the per-n slope of the true
    asymptotic; its excess over both log r and the per-n log of the bound's
    exponential part is where the Euler-Mascheroni constant shows up.
    ``gap_per_n`` is (exact log - Stirling bound log) / n, None when n = 0.
    """
    r = prog.r
    if not is_prime(r):
        raise ValueError("the gap report is defined for prime r")
    target = lcm_value(prog, n)
    exact_log = high_precision_log(target)
    s2 = step2_characterization(prog, n, sieve_cap=sieve_cap)
    slb = stirling_log_bound(prog, n)
    return AsymptoticsReport(
        n=n,
        exact_log_lcm=exact_log,
        step2_sum=s2.log_sum,
        step2_exact=step2_exactness(prog, n),
        step3_main_term=step3_main_term(prog, n),
        step4_main_term=step4_main_term(prog, n),
        stirling_log_bound=slb,
        exppart_per_n_log=exppart_per_n_log(r),
        linear_term_per_n=float(Fraction(r) * harmonic(r - 1) / (r - 1)),
        gap_per_n=(exact_log - slb) / n if n >= 1 else None,
    )

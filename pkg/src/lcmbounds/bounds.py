"""Lower bounds on lcm(u_0, ..., u_n) and exact machinery to verify them.

Every bound is represented as mantissa * base^exponent with a rational
mantissa and a rational exponent, so validity verdicts against the exact lcm
never touch floating point: comparisons clear the exponent denominator by
raising both sides to an integer power.  A float log mirror rides along for
reporting only.

Four bound variants are provided:

* ``multi_prime``  - C(n,k) * prod over primes p | r of p^((n-k)/(p-1)) / (n-k+1)
* ``single_r``     - C(n,k) * r^((n-k)/(r-1)) / (n-k+1)
* ``binomial``     - r^((n-k)r/(r-1)) * binom(u_{k-1}/r + (n-k+1), n-k+1),
                     the compact binomial form exactly as usually displayed
* ``binomial_corrected`` - r times ``binomial``

Exact-rational expansion shows ``binomial`` equals ``single_r`` divided by r
at every argument (the verification grid confirms this), so the corrected
variant coincides with ``single_r``.  Both are kept and both are checked to
stay below the true lcm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import ResourceLimitError
from .number_theory import factorize
from .progression import Progression, c_value, lcm_value

#: Bit budget for cleared-exponent exact comparisons.
DEFAULT_COMPARE_BITS = 1 << 24

VARIANTS = ("multi_prime", "single_r", "binomial", "binomial_corrected")


def fraction_log(x: Fraction) -> float:
    """Natural log of a positive rational; exact for arbitrarily long integers."""
    if x <= 0:
        raise ValueError("log of a non-positive rational")
    return math.log(x.numerator) - math.log(x.denominator)


@dataclass(frozen=True)
class BoundValue:
    """An exactly comparable value mantissa * base^exponent, mantissa > 0.

    ``log_value`` is the natural log, for reporting; verdicts never use it.
    """

    mantissa: Fraction
    base: int
    exponent: Fraction
    log_value: float

    def exact_str(self, *, max_bits: int = 1 << 20) -> str:
        """Render as a full integer when the value is integral and small
        enough to materialize, else as ``mantissa*base^(p/q)``."""
        if self.exponent.denominator == 1:
            e = int(self.exponent)
            if e * max(self.base.bit_length(), 1) <= max_bits:
                value = self.mantissa * Fraction(self.base) ** e
                if value.denominator == 1:
                    return str(value.numerator)
        return f"{self.mantissa}*{self.base}^({self.exponent})"


def make_bound(mantissa: Fraction, base: int = 1, exponent: Fraction = Fraction(0)) -> BoundValue:
    mantissa = Fraction(mantissa)
    exponent = Fraction(exponent)
    if mantissa <= 0:
        raise ValueError("mantissa must be positive")
    if base < 1:
        raise ValueError("base must be >= 1")
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    if base == 1:
        exponent = Fraction(0)  # 1^x == 1: canonical form
    log_value = fraction_log(mantissa) + float(exponent) * math.log(base)
    return BoundValue(mantissa=mantissa, base=base, exponent=exponent, log_value=log_value)


def scale_bound(b: BoundValue, factor) -> BoundValue:
    """Multiply the mantissa by a positive rational factor."""
    return make_bound(b.mantissa * Fraction(factor), b.base, b.exponent)


def _budget_check(bits: int, max_bits: int) -> None:
    if bits > max_bits:
        raise ResourceLimitError(
            f"exact comparison needs ~{bits} bits, over the {max_bits}-bit budget"
        )


def exact_compare(b: BoundValue, m: int, *, max_bits: int = DEFAULT_COMPARE_BITS) -> int:
    """Compare b against the integer m with zero floating error.

    Clears the exponent denominator q by comparing
    mantissa^q * base^(q*exponent) against m^q as exact integers.
    Returns -1, 0, or 1.
    """
    if m < 0:
        return 1  # bound values are positive
    q = b.exponent.denominator
    e = int(b.exponent * q)
    a, c = b.mantissa.numerator, b.mantissa.denominator
    est = q * (a.bit_length() + c.bit_length() + m.bit_length())
    est += e * max(b.base.bit_length(), 1)
    _budget_check(est, max_bits)
    lhs = a**q * b.base**e
    rhs = m**q * c**q
    return (lhs > rhs) - (lhs < rhs)


def compare_bounds(x: BoundValue, y: BoundValue, *, max_bits: int = DEFAULT_COMPARE_BITS) -> int:
    """Exact three-way comparison of two bound values (possibly different bases)."""
    q = math.lcm(x.exponent.denominator, y.exponent.denominator)
    ex = int(x.exponent * q)
    ey = int(y.exponent * q)
    ax, cx = x.mantissa.numerator, x.mantissa.denominator
    ay, cy = y.mantissa.numerator, y.mantissa.denominator
    est = q * (ax.bit_length() + cx.bit_length() + ay.bit_length() + cy.bit_length())
    est += ex * max(x.base.bit_length(), 1) + ey * max(y.base.bit_length(), 1)
    _budget_check(est, max_bits)
    lhs = ax**q * x.base**ex * cy**q
    rhs = ay**q * y.base**ey * cx**q
    return (lhs > rhs) - (lhs < rhs)


def rational_binomial(x: Fraction, m: int) -> Fraction:
    """Generalized binomial coefficient binom(x, m) for rational x, integer m >= 0.

    Defined by the falling-factorial product prod_{j=1..m} (x - m + j) / j;
    evaluated as one big integer quotient, never through the Gamma function.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    num = math.prod(a + (j - m) * b for j in range(1, m + 1))
    den = b**m * math.factorial(m)
    return Fraction(num, den)


def _check_window(n: int, k: int) -> None:
    if k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")


def _require_r_at_least_2(prog: Progression, what: str) -> None:
    if prog.r < 2:
        raise ValueError(f"{what} is undefined for r = 1 (division by r - 1)")


def bound_multi_prime(prog: Progression, n: int, k: int) -> BoundValue:
    """C(n,k) times prod over primes p | r of p^((n-k)/(p-1)) / (n-k+1).

    The prime product collapses to base^((n-k)/Q) with
    Q = lcm{p-1 : p | r} and base = prod p^(Q/(p-1)); for r = 1 the product
    is empty and the value is just C(n,k).
    """
    _check_window(n, k)
    m = n - k
    c = c_value(prog, n, k)
    primes = [p for p, _ in factorize(prog.r).factors]
    if not primes:
        return make_bound(c)
    q_common = math.lcm(*[p - 1 for p in primes])
    base = math.prod(p ** (q_common // (p - 1)) for p in primes)
    mantissa = c / Fraction(m + 1) ** len(primes)
    return make_bound(mantissa, base, Fraction(m, q_common))


def bound_single_r(prog: Progression, n: int, k: int) -> BoundValue:
    """C(n,k) * r^((n-k)/(r-1)) / (n-k+1); requires r >= 2."""
    _check_window(n, k)
    _require_r_at_least_2(prog, "the single-modulus bound")
    m = n - k
    mantissa = c_value(prog, n, k) / (m + 1)
    return make_bound(mantissa, prog.r, Fraction(m, prog.r - 1))


def bound_binomial(prog: Progression, n: int, k: int) -> BoundValue:
    """The compact binomial form r^((n-k)r/(r-1)) * binom(u_{k-1}/r + (n-k+1), n-k+1).

    ``u_{k-1}`` means u0 + (k-1)r and k = 0 is allowed (the top argument of
    the binomial is then (u0 - r)/r + n + 1, which the falling-factorial
    product handles for any sign).  Equals bound_single_r / r identically.
    """
    _check_window(n, k)
    _require_r_at_least_2(prog, "the binomial-form bound")
    m = n - k + 1
    top = Fraction(prog.term(k - 1), prog.r) + m
    mantissa = rational_binomial(top, m)
    return make_bound(mantissa, prog.r, Fraction((n - k) * prog.r, prog.r - 1))


def bound_binomial_corrected(prog: Progression, n: int, k: int) -> BoundValue:
    """r times bound_binomial; coincides exactly with bound_single_r."""
    return scale_bound(bound_binomial(prog, n, k), prog.r)


def bound_large_u0(prog: Progression, n: int, *, corrected: bool = False) -> BoundValue:
    """The k = 0 specialization r^(nr/(r-1)) * binom(u0/r + n, n+1).

    Sharpest when u0 is large (the optimal k is then 0).  With
    ``corrected=True`` the value is multiplied by r, matching bound_single_r
    at k = 0.
    """
    if corrected:
        return bound_binomial_corrected(prog, n, 0)
    return bound_binomial(prog, n, 0)


_BOUND_CONSTRUCTORS: dict[str, Callable[[Progression, int, int], BoundValue]] = {
    "multi_prime": bound_multi_prime,
    "single_r": bound_single_r,
    "binomial": bound_binomial,
    "binomial_corrected": bound_binomial_corrected,
}


def bound_variant(variant: str) -> Callable[[Progression, int, int], BoundValue]:
    try:
        return _BOUND_CONSTRUCTORS[variant]
    except KeyError:
        raise ValueError(f"unknown bound variant {variant!r}; choose from {VARIANTS}")


def _t_at_most(u0: int, r: int, n: int, c: int) -> bool:
    """Exact predicate T <= c for T = (n+1 - u0*rho)/(r*rho + 1), rho = r^(1/(r-1)).

    Rearranges to n+1-c <= rho*(c*r + u0) and clears the (r-1)-th root:
    rho^(r-1) = r, so both sides are compared as integer powers.
    """
    lhs = n + 1 - c
    rhs_linear = c * r + u0
    if rhs_linear >= 0:
        if lhs <= 0:
            return True
        if rhs_linear == 0:
            return False
        return lhs ** (r - 1) <= r * rhs_linear ** (r - 1)
    if lhs > 0:
        return False
    return (-lhs) ** (r - 1) >= r * (-rhs_linear) ** (r - 1)


def k_star(prog: Progression, n: int) -> int:
    """The closed-form optimal shift max{0, ceil((n+1 - u0 r^(1/(r-1))) / (r^(r/(r-1)) + 1))}.

    The ceiling is resolved exactly: a float estimate seeds the search and
    integer comparisons with the root cleared settle it, so near-integer
    arguments cannot round the wrong way.  At an exact tie (the argument an
    integer) the ceiling is that integer, which matches the brute-force
    argmax under its smaller-k tie-break.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _require_r_at_least_2(prog, "k_star")
    u0, r = prog.u0, prog.r
    rho = r ** (1.0 / (r - 1))
    seed = (n + 1 - u0 * rho) / (r * rho + 1)
    c = math.ceil(seed)
    while _t_at_most(u0, r, n, c - 1):
        c -= 1
    while not _t_at_most(u0, r, n, c):
        c += 1
    return max(0, c)


def k_argmax(prog: Progression, n: int, variant: str = "single_r") -> int:
    """Brute-force argmax over k in [0, n] of the chosen bound variant.

    Comparisons are exact; ties break toward smaller k.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    ctor = bound_variant(variant)
    best_k = 0
    best = ctor(prog, n, 0)
    for k in range(1, n + 1):
        candidate = ctor(prog, n, k)
        if compare_bounds(candidate, best) > 0:
            best, best_k = candidate, k
    return best_k


@dataclass(frozen=True)
class TanHongParams:
    """Parameters (a, l, alpha) of the prior baseline bound.

    Requires a, l >= 2 and alpha >= a here; the progression-dependent parts
    (r >= max(a, l-1) and n >= l*alpha*r) are checked at evaluation time.
    """

    a: int
    ell: int
    alpha: int

    def __post_init__(self) -> None:
        if self.a < 2 or self.ell < 2:
            raise ValueError("need a >= 2 and ell >= 2")
        if self.alpha < self.a:
            raise ValueError("need alpha >= a")


def bound_tan_hong(prog: Progression, n: int, params: TanHongParams) -> BoundValue:
    """The prior baseline u0 * r^((l-1)alpha + a - l) * (r+1)^n, an exact integer."""
    a, ell, alpha = params.a, params.ell, params.alpha
    r = prog.r
    if r < max(a, ell - 1):
        raise ValueError(f"hypothesis violated: r={r} < max(a, ell-1)={max(a, ell - 1)}")
    if n < ell * alpha * r:
        raise ValueError(f"hypothesis violated: n={n} < ell*alpha*r={ell * alpha * r}")
    exponent = (ell - 1) * alpha + a - ell
    mantissa = Fraction(prog.u0 * r**exponent)
    return make_bound(mantissa, r + 1, Fraction(n))


def bound_tan_hong_optimized(prog: Progression, n: int) -> BoundValue:
    """The baseline at its best parameters a = r, l = r+1, alpha = floor(n/(r(r+1))).

    Valid once n >= r^2 (r+1); below that the alpha >= a hypothesis fails.
    """
    _require_r_at_least_2(prog, "the optimized baseline bound")
    r = prog.r
    if n < r * r * (r + 1):
        raise ValueError(f"need n >= r^2(r+1) = {r * r * (r + 1)}, got n={n}")
    params = TanHongParams(a=r, ell=r + 1, alpha=n // (r * (r + 1)))
    return bound_tan_hong(prog, n, params)


@dataclass(frozen=True)
class VariantRecord:
    """One evaluated bound: which variant, at which k, and whether it held."""

    variant: str
    k: Optional[int]
    bound: Optional[BoundValue]
    valid: Optional[bool]
    error: str = ""


@dataclass(frozen=True)
class BoundReport:
    """Everything about one (progression, n): exact lcm, bounds, verdicts."""

    progression: Progression
    n: int
    lcm: int
    k_star: Optional[int]
    k_argmax: int
    records: list[VariantRecord]
    tan_hong_optimized: Optional[VariantRecord]
    best_variant: Optional[str]
    best_k: Optional[int]
    ratio_log: Optional[float]
    ratio: Optional[float]

    @property
    def all_valid(self) -> bool:
        """True when no evaluated bound exceeded the exact lcm."""
        results = [rec.valid for rec in self.records if rec.valid is not None]
        if self.tan_hong_optimized and self.tan_hong_optimized.valid is not None:
            results.append(self.tan_hong_optimized.valid)
        return all(results)


def full_report(prog: Progression, n: int) -> BoundReport:
    """Evaluate every variant at k in {0, k_star, k_argmax} and verify each
    against the exact lcm; per-variant failures are recorded, not raised."""
    if n < 0:
        raise ValueError("n must be >= 0")
    target = lcm_value(prog, n)

    if prog.r >= 2:
        ks = k_star(prog, n)
        karg = k_argmax(prog, n, "single_r")
    else:
        ks = None
        karg = k_argmax(prog, n, "multi_prime")
    k_candidates = sorted({0, karg} | ({ks} if ks is not None else set()))

    records: list[VariantRecord] = []
    for variant in VARIANTS:
        ctor = bound_variant(variant)
        for k in k_candidates:
            try:
                b = ctor(prog, n, k)
            except ValueError as exc:
                records.append(
                    VariantRecord(variant=variant, k=k, bound=None, valid=None, error=str(exc))
                )
                break  # same error for every k; record once
            valid = exact_compare(b, target) <= 0
            records.append(VariantRecord(variant=variant, k=k, bound=b, valid=valid))

    tan_hong: Optional[VariantRecord] = None
    if prog.r >= 2 and n >= prog.r**2 * (prog.r + 1):
        th = bound_tan_hong_optimized(prog, n)
        tan_hong = VariantRecord(
            variant="tan_hong_optimized",
            k=None,
            bound=th,
            valid=exact_compare(th, target) <= 0,
        )

    scored = [rec for rec in records if rec.bound is not None]
    best_variant = best_k = None
    ratio_log = ratio = None
    if scored:
        best = max(scored, key=lambda rec: rec.bound.log_value)
        best_variant, best_k = best.variant, best.k
        ratio_log = math.log(target) - best.bound.log_value
        try:
            ratio = math.exp(ratio_log)
        except OverflowError:
            ratio = math.inf

    return BoundReport(
        progression=prog,
        n=n,
        lcm=target,
        k_star=ks,
        k_argmax=karg,
        records=records,
        tan_hong_optimized=tan_hong,
        best_variant=best_variant,
        best_k=best_k,
        ratio_log=ratio_log,
        ratio=ratio,
    )

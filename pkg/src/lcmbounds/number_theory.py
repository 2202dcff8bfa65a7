"""Exact integer primitives: primes, factorizations, valuations of factorials,
von Mangoldt / totient / digit-sum utilities, and exact harmonic numbers.

Everything here is pure integer or rational arithmetic; floats appear only in
the analytic floor of :class:`FactorialValuation` and in the real value of the
von Mangoldt function.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from ._kernels import collect_primes, prime_mask
from .errors import ResourceLimitError

#: Hard ceiling for sieve sizes; the mask alone costs limit+1 bytes.
DEFAULT_SIEVE_MAX = 10**8


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit``, ascending, with O(1) membership tests."""

    limit: int
    primes: list[int]
    mask: bytes = field(repr=False, compare=False)

    def is_prime(self, m: int) -> bool:
        if m < 0 or m > self.limit:
            raise ValueError(f"{m} is outside the table range [0, {self.limit}]")
        return bool(self.mask[m])

    def __len__(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class Factorization:
    """``base`` as an ascending list of (prime, exponent >= 1) pairs."""

    base: int
    factors: list[tuple[int, int]]

    def reconstruct(self) -> int:
        return math.prod(p**e for p, e in self.factors)


@dataclass(frozen=True)
class FactorialValuation:
    """How many times s >= 2 divides m!.

    ``lemma_exponent`` is the floor-sum count (valid for any s, not just
    primes), ``max_exponent`` the true largest a with s^a | m!, and
    ``analytic_floor`` the closed-form real lower bound
    m/(s-1) - log_s(m+1).  The three always satisfy
    analytic_floor <= lemma_exponent <= max_exponent.
    """

    s: int
    m: int
    lemma_exponent: int
    max_exponent: int
    analytic_floor: float


def sieve(limit: int, *, max_limit: int = DEFAULT_SIEVE_MAX) -> PrimeTable:
    """All primes <= limit.

    Raises ResourceLimitError when limit exceeds ``max_limit`` (default 10^8).
    """
    if limit < 0:
        raise ValueError("limit must be >= 0")
    if limit > max_limit:
        raise ResourceLimitError(
            f"sieve limit {limit} exceeds the configured maximum {max_limit}"
        )
    mask = bytes(prime_mask(limit))
    return PrimeTable(limit=limit, primes=collect_primes(mask), mask=mask)


_shared_lock = threading.Lock()
_shared_table: Optional[PrimeTable] = None


def shared_table(limit: int) -> PrimeTable:
    """Module-wide prime table, regrown geometrically on demand.

    Callers must treat the result as immutable.  Construction is serialized;
    lookups afterwards are safe from any thread.
    """
    global _shared_table
    with _shared_lock:
        if _shared_table is None or _shared_table.limit < limit:
            target = max(limit, 1 << 16)
            if _shared_table is not None:
                target = max(target, 2 * _shared_table.limit)
            _shared_table = sieve(target)
        return _shared_table


def is_prime(m: int) -> bool:
    """Primality by trial division against the shared table."""
    if m < 2:
        return False
    root = math.isqrt(m)
    for p in shared_table(root).primes:
        if p > root:
            break
        if m % p == 0:
            return False
    return True


def factorize(m: int) -> Factorization:
    """Prime factorization by trial division with sieved primes up to sqrt(m).

    Intended for desk-scale inputs (everything the experiments feed in stays
    below the sieve ceiling); there is deliberately no large-number factoring.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    base = m
    factors: list[tuple[int, int]] = []
    root = math.isqrt(m)
    for p in shared_table(root).primes:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        factors.append((m, 1))
    return Factorization(base=base, factors=factors)


def legendre_valuation(p: int, m: int) -> int:
    """v_p(m!) = sum_i floor(m / p^i) for prime p; always <= m/(p-1)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 0:
        raise ValueError("m must be >= 0")
    total = 0
    q = p
    while q <= m:
        total += m // q
        q *= p
    return total


def digitsum(m: int, s: int) -> int:
    """Sum of the base-s digits of m."""
    if s < 2:
        raise ValueError("base must be >= 2")
    if m < 0:
        raise ValueError("m must be >= 0")
    total = 0
    while m:
        m, digit = divmod(m, s)
        total += digit
    return total


def factorial_valuation(s: int, m: int) -> FactorialValuation:
    """Exponent bookkeeping for s^a | m!, any integer s >= 2.

    The floor-sum exponent equals (m - digitsum(m, s)) / (s - 1) and is a
    valid divisibility exponent for composite s as well; the true maximum is
    the min over prime-power factors p^e of s of floor(v_p(m!) / e).
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    if m < 0:
        raise ValueError("m must be >= 0")
    lemma = 0
    q = s
    while q <= m:
        lemma += m // q
        q *= s
    if m == 0:
        max_exp = 0
    else:
        max_exp = min(
            legendre_valuation(p, m) // e for p, e in factorize(s).factors
        )
    floor_bound = m / (s - 1) - math.log(m + 1) / math.log(s)
    return FactorialValuation(
        s=s, m=m, lemma_exponent=lemma, max_exponent=max_exp, analytic_floor=floor_bound
    )


def prime_power(d: int) -> Optional[tuple[int, int]]:
    """(p, k) with d = p^k when d is a prime power, else None."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return None
    root = math.isqrt(d)
    for p in shared_table(root).primes:
        if p > root:
            break
        if d % p == 0:
            k = 0
            while d % p == 0:
                d //= p
                k += 1
            return (p, k) if d == 1 else None
    return (d, 1)  # no factor <= sqrt(d): d itself is prime


def von_mangoldt(d: int) -> float:
    """log p when d is a prime power p^k, else 0."""
    pp = prime_power(d)
    return math.log(pp[0]) if pp else 0.0


def euler_phi(r: int) -> int:
    """Count of 1 <= l <= r coprime to r."""
    if r < 1:
        raise ValueError("r must be >= 1")
    result = r
    for p, _ in factorize(r).factors:
        result = result // p * (p - 1)
    return result


def mod_inverse(a: int, r: int) -> int:
    """The b in [1, r-1] with a*b = 1 (mod r); requires gcd(a, r) = 1."""
    if r < 2:
        raise ValueError("modulus must be >= 2")
    if math.gcd(a, r) != 1:
        raise ValueError(f"{a} is not invertible modulo {r}")
    return pow(a, -1, r)


def harmonic(m: int) -> Fraction:
    """Exact harmonic number H_m = 1 + 1/2 + ... + 1/m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum(Fraction(1, j) for j in range(1, m + 1))


def coprime_part(m: int, r: int) -> int:
    """Largest divisor of m coprime to r."""
    if m < 1 or r < 1:
        raise ValueError("m and r must be >= 1")
    while True:
        g = math.gcd(m, r)
        if g == 1:
            return m
        while m % g == 0:
            m //= g


def prime_powers_up_to(
    limit: int, table: Optional[PrimeTable] = None
) -> Iterator[tuple[int, int, int]]:
    """Yield (d, p, k) for every prime power d = p^k <= limit, grouped by p.

    Within one prime the powers come in increasing k, which downstream code
    relies on when looking for the largest power satisfying a condition.
    """
    if table is None or table.limit < limit:
        table = shared_table(limit)
    for p in table.primes:
        if p > limit:
            break
        d, k = p, 1
        while d <= limit:
            yield d, p, k
            d *= p
            k += 1

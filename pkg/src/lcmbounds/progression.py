"""Arithmetic progressions u_k = u0 + k*r and exact lcm arithmetic on them.

All quantities are exact: lcms are big integers, C values are Fractions, and
the quotient A = lcm / C is asserted integral before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import IntegrityError


@dataclass(frozen=True)
class Progression:
    """The progression u_k = u0 + k*r with gcd(u0, r) = 1, u0, r >= 1."""

    u0: int
    r: int

    def __post_init__(self) -> None:
        if self.u0 < 1 or self.r < 1:
            raise ValueError("u0 and r must be >= 1")
        if math.gcd(self.u0, self.r) != 1:
            raise ValueError(f"gcd(u0={self.u0}, r={self.r}) must be 1")

    def term(self, k: int) -> int:
        return self.u0 + k * self.r


@dataclass(frozen=True)
class ExactLcm:
    """lcm(u_k, ..., u_n) for one progression and index window."""

    progression: Progression
    n: int
    k: int
    value: int


@dataclass(frozen=True)
class QuotientDecomposition:
    """The split lcm(u_k..u_n) = a * c with c = u_k...u_n/(n-k)! and a integral."""

    c: Fraction
    a: int


def term(prog: Progression, k: int) -> int:
    """The k-th term u0 + k*r."""
    return prog.term(k)


def terms(prog: Progression, k: int, n: int) -> list[int]:
    """[u_k, ..., u_n]."""
    if k > n:
        raise ValueError("need k <= n")
    return [prog.u0 + j * prog.r for j in range(k, n + 1)]


def exact_lcm(prog: Progression, n: int, k: int = 0) -> ExactLcm:
    """lcm(u_k, ..., u_n) by a left fold of pairwise lcms (exact gcds)."""
    if k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    value = reduce(math.lcm, terms(prog, k, n))
    return ExactLcm(progression=prog, n=n, k=k, value=value)


def lcm_value(prog: Progression, n: int, k: int = 0) -> int:
    """Shorthand for exact_lcm(...).value."""
    return exact_lcm(prog, n, k).value


def tail_lcms(prog: Progression, n: int) -> list[int]:
    """All suffix lcms at once: result[k] = lcm(u_k, ..., u_n).

    One pass from the right; much cheaper than n+1 separate exact_lcm calls
    when a whole grid over k is needed.
    """
    out = [0] * (n + 1)
    acc = 1
    for k in range(n, -1, -1):
        acc = math.lcm(acc, prog.term(k))
        out[k] = acc
    return out


def c_value(prog: Progression, n: int, k: int = 0) -> Fraction:
    """The exact rational u_k * ... * u_n / (n-k)!."""
    if k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    return Fraction(math.prod(terms(prog, k, n)), math.factorial(n - k))


def a_value(prog: Progression, n: int, k: int = 0) -> int:
    """The integer quotient lcm(u_k..u_n) / c_value(prog, n, k).

    Integrality always holds here; a non-integral quotient would falsify the
    foundations, so it raises IntegrityError rather than returning a rational.
    """
    if k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    numerator = lcm_value(prog, n, k) * math.factorial(n - k)
    product = math.prod(terms(prog, k, n))
    quotient, remainder = divmod(numerator, product)
    if remainder:
        raise IntegrityError(
            f"lcm/C is not an integer at (u0={prog.u0}, r={prog.r}, n={n}, k={k})"
        )
    return quotient


def decompose(prog: Progression, n: int, k: int = 0) -> QuotientDecomposition:
    """Both halves of lcm = a * c, with the integrality of a enforced."""
    return QuotientDecomposition(c=c_value(prog, n, k), a=a_value(prog, n, k))

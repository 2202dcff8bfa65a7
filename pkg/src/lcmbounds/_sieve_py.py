"""Pure-Python sieve kernels, used when the compiled core is unavailable."""

import math


def prime_mask(limit: int) -> bytearray:
    """Bytearray of length limit+1 with mask[i] == 1 iff i is prime."""
    if limit < 0:
        raise ValueError("limit must be >= 0")
    mask = bytearray(limit + 1)
    if limit < 2:
        return mask
    mask[2:] = b"\x01" * (limit - 1)
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            start = p * p
            mask[start::p] = b"\x00" * ((limit - start) // p + 1)
    return mask


def collect_primes(mask) -> list:
    """All indices i with mask[i] nonzero, ascending."""
    return [i for i, hit in enumerate(mask) if hit]

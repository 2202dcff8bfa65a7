# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sieve kernels: the hot inner loop behind prime table construction."""


def prime_mask(Py_ssize_t limit):
    """Bytearray of length limit+1 with mask[i] == 1 iff i is prime."""
    if limit < 0:
        raise ValueError("limit must be >= 0")
    out = bytearray(limit + 1)
    if limit < 2:
        return out
    cdef unsigned char[::1] m = out
    cdef Py_ssize_t i, j
    for i in range(2, limit + 1):
        m[i] = 1
    i = 2
    while i * i <= limit:
        if m[i]:
            j = i * i
            while j <= limit:
                m[j] = 0
                j += i
        i += 1
    return out


def collect_primes(mask):
    """All indices i with mask[i] nonzero, ascending."""
    cdef const unsigned char[::1] m = mask
    cdef Py_ssize_t i, n = m.shape[0]
    out = []
    for i in range(n):
        if m[i]:
            out.append(i)
    return out

"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; otherwise the
pure-Python sieve takes over with identical semantics.  Setting
LCMB_PURE_PYTHON=1 forces the fallback (the benchmark uses this to compare
the two sides on equal footing).
"""

import os

if os.environ.get("LCMB_PURE_PYTHON"):
    from . import _sieve_py as _impl

    KERNEL_BACKEND = "python"
else:
    try:
        from . import _sieve_c as _impl  # type: ignore[no-redef]

        KERNEL_BACKEND = "cython"
    except ImportError:
        from . import _sieve_py as _impl  # type: ignore[no-redef]

        KERNEL_BACKEND = "python"

prime_mask = _impl.prime_mask
collect_primes = _impl.collect_primes

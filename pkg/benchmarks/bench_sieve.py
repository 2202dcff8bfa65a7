#!/usr/bin/env python3
"""Benchmark the compiled sieve kernel against the pure-Python fallback.

Run after installing the package:

    python benchmarks/bench_sieve.py
    python benchmarks/bench_sieve.py --limits 100000 2000000 10000000 --repeat 5

Both backends are imported directly, so the comparison works no matter which
one the package selected at import time.
"""

import argparse
import time

from lcmbounds import _sieve_py

try:
    from lcmbounds import _sieve_c
except ImportError:
    _sieve_c = None


def time_backend(module, limit: int, repeat: int) -> tuple[float, float]:
    best_mask = best_collect = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        mask = module.prime_mask(limit)
        t1 = time.perf_counter()
        module.collect_primes(mask)
        t2 = time.perf_counter()
        best_mask = min(best_mask, t1 - t0)
        best_collect = min(best_collect, t2 - t1)
    return best_mask, best_collect


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--limits", type=int, nargs="+", default=[100_000, 1_000_000, 5_000_000]
    )
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _sieve_c is None:
        print("compiled kernel not installed; timing the pure-Python sieve only")

    header = f"{'limit':>12}  {'python mask':>12}  {'python collect':>14}"
    if _sieve_c is not None:
        header += f"  {'cython mask':>12}  {'cython collect':>14}  {'mask speedup':>12}"
    print(header)

    for limit in args.limits:
        py_mask, py_collect = time_backend(_sieve_py, limit, args.repeat)
        line = f"{limit:>12}  {py_mask:>12.4f}  {py_collect:>14.4f}"
        if _sieve_c is not None:
            cy_mask, cy_collect = time_backend(_sieve_c, limit, args.repeat)
            if bytes(_sieve_c.prime_mask(limit)) != bytes(_sieve_py.prime_mask(limit)):
                raise AssertionError(f"backends disagree at limit={limit}")
            line += f"  {cy_mask:>12.4f}  {cy_collect:>14.4f}  {py_mask / cy_mask:>11.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Exact lower bounds for the least common multiple of an arithmetic progression.

The package computes lcm(u0, u0+r, ..., u0+n*r) exactly, evaluates a family
of lower bounds in an exactly comparable representation, and exposes the
asymptotic analysis relating the two.  The sieve kernels run on a compiled
core when it is installed, with a pure-Python fallback selected at import.
"""

from ._kernels import KERNEL_BACKEND
from .asymptotics import (
    EULER_GAMMA,
    AsymptoticsReport,
    MangoldtCharacterization,
    StirlingParams,
    exppart_per_n_log,
    gamma_gap_report,
    high_precision_log,
    log_lcm_via_mangoldt,
    step2_characterization,
    step2_exactness,
    step2_sum,
    step3_main_term,
    step4_main_term,
    stirling_log_bound,
    stirling_params,
)
from .bounds import (
    VARIANTS,
    BoundReport,
    BoundValue,
    TanHongParams,
    VariantRecord,
    bound_binomial,
    bound_binomial_corrected,
    bound_large_u0,
    bound_multi_prime,
    bound_single_r,
    bound_tan_hong,
    bound_tan_hong_optimized,
    compare_bounds,
    exact_compare,
    full_report,
    k_argmax,
    k_star,
    rational_binomial,
)
from .errors import IntegrityError, ResourceLimitError
from .number_theory import (
    Factorization,
    FactorialValuation,
    PrimeTable,
    coprime_part,
    digitsum,
    euler_phi,
    factorial_valuation,
    factorize,
    harmonic,
    is_prime,
    legendre_valuation,
    mod_inverse,
    prime_power,
    sieve,
    von_mangoldt,
)
from .progression import (
    ExactLcm,
    Progression,
    QuotientDecomposition,
    a_value,
    c_value,
    decompose,
    exact_lcm,
    lcm_value,
    tail_lcms,
    term,
)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Which sieve kernel is active: "cython" or "python"."""
    return KERNEL_BACKEND

"""Exact Omega and Psi sequences with their number-theoretic checks."""
from .config import Caps, CapExceeded, load_caps
from .exactmath import (
    DivideByZero,
    MixedRadicand,
    MultiPoly,
    NotDivisible,
    QuadElem,
    exact_div,
    sqrt,
    var,
    variables,
)
from .number_theory import (
    EmergenceReport,
    MersenneVerdict,
    PrimeIndexer,
    bertrand_check,
    chebyshev_T,
    combinatorial_identity_check,
    dickson_D,
    emergence_ratio,
    fermat_via_omega,
    fib_lucas_oscillating,
    fibonacci_via_lambda,
    gen1_check,
    gen2_check,
    kth_prime,
    llm_composite_witness,
    llm_is_mersenne_prime,
    lucas_via_omega,
    mersenne_via_omega,
    prime_fib_check,
    primes_upto,
    psi_periodicity_tables,
    second_fundamental_check,
    third_fundamental_check,
)
from .omega import (
    OmegaPoint,
    OmegaTable,
    falling_product,
    in_kernel,
    in_omega_space,
    omega_ratio,
    omega_table,
    omega_top,
)
from .psi import (
    HomogenizationPair,
    PsiParams,
    TwoRowParams,
    lambda_omega_bridge,
    lambda_table,
    psi,
    psi_mod,
    psi_mod_fast,
    psi_sum,
    psi_two_row,
    psi_two_rows,
    theta_sum,
    theta_sum_homogenized,
    theta_sum_shifted,
    theta_sum_shifted_homogenized,
    verify_derivative_recurrences,
    verify_ex00,
    verify_scaling,
    verify_sums_of_powers,
)
from .report import Verdict

__version__ = "0.1.0"

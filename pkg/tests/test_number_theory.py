from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from omegalab.config import Caps, CapExceeded
from omegalab.exactmath import QuadElem, sqrt, variables
from omegalab.number_theory import (
    KernelPoint,
    bertrand_check,
    chebyshev_T,
    combinatorial_identity_check,
    dickson_D,
    emergence_ratio,
    fermat_via_omega,
    fib_lambda_top,
    fib_lucas_oscillating,
    fibonacci_via_lambda,
    gen1_check,
    gen2_check,
    is_prime_trial,
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
from omegalab.omega import in_omega_space, omega_ratio, omega_top
from omegalab.psi import psi_mod

from oracles import chebyshev, dickson, fibonacci, is_prime, lucas, primes

FIB = fibonacci(120)
LUC = lucas(120)
PRIMES = primes(40)


# --- primes


def test_prime_indexing():
    assert kth_prime(1) == 2
    assert kth_prime(2) == 3
    assert kth_prime(3) == 5
    assert [kth_prime(k) for k in range(1, 41)] == PRIMES
    idx = primes_upto(200)
    assert idx.kth_prime(10) == 29
    assert 199 in idx and 200 not in idx
    with pytest.raises(IndexError):
        idx.kth_prime(1000)


def test_sieve_cap():
    with pytest.raises(CapExceeded):
        primes_upto(10**7)
    with pytest.raises(IndexError):
        kth_prime(500, caps=Caps(sieve_bound=1000))


def test_trial_division_matches_oracle():
    assert [n for n in range(500) if is_prime_trial(n)] == [n for n in range(500) if is_prime(n)]


# --- representations


def test_mersenne_representation():
    assert mersenne_via_omega(1) == 1
    assert mersenne_via_omega(5) == 31
    assert mersenne_via_omega(13) == 8191
    for p in range(1, 26, 2):
        assert mersenne_via_omega(p) == 2**p - 1
    with pytest.raises(ValueError):
        mersenne_via_omega(4)


def test_fermat_representation():
    assert [fermat_via_omega(n) for n in (1, 2, 4)] == [5, 17, 65537]
    for n in range(1, 6):
        assert fermat_via_omega(n) == 2 ** (2**n) + 1
    with pytest.raises(CapExceeded):
        fermat_via_omega(7)


def test_lucas_and_oscillating_representations():
    assert lucas_via_omega(1) == 1 and lucas_via_omega(2) == 3
    assert fib_lucas_oscillating(5) == 5
    assert fib_lucas_oscillating(6) == 18
    for n in range(1, 51):
        assert lucas_via_omega(n) == LUC[n]
        assert fib_lucas_oscillating(n) == (FIB[n] if n % 2 else LUC[n])


def test_fibonacci_representation():
    assert fibonacci_via_lambda(1) == 1
    assert fibonacci_via_lambda(10) == 55
    assert fibonacci_via_lambda(12) == 144
    assert [fibonacci_via_lambda(n) for n in range(1, 51)] == FIB[1:51]


def test_chebyshev_examples():
    assert chebyshev_T(0, 7) == 1
    assert chebyshev_T(1, Fraction(3, 5)) == Fraction(3, 5)
    assert chebyshev_T(2, 2) == 7
    assert chebyshev_T(5, 2) == 362


def test_chebyshev_integer_grid():
    for x in range(-4, 5):
        expected = chebyshev(30, x)
        assert [chebyshev_T(n, x) for n in range(31)] == expected


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=9), st.integers(0, 25))
def test_chebyshev_rational_points(x, n):
    assert chebyshev_T(n, x) == chebyshev(n, x)[n]


def test_dickson_examples():
    x, alpha = variables("x", "alpha")
    assert dickson_D(1, x, alpha) == x
    assert dickson_D(2, x, alpha) == x**2 - 2 * alpha
    assert dickson_D(3, 3, 1) == 18
    assert dickson_D(4, 0, 0) == 0


def test_dickson_integer_grid():
    for x in range(-4, 5):
        for alpha in range(-4, 5):
            expected = dickson(30, x, alpha)
            assert [dickson_D(n, x, alpha) for n in range(1, 31)] == expected[1:]


def test_dickson_explicit_sum():
    for x in range(-4, 5):
        for alpha in range(-4, 5):
            for n in range(1, 31):
                total = sum(
                    Fraction(n, n - i) * comb(n - i, i) * (-alpha) ** i * x ** (n - 2 * i) for i in range(n // 2 + 1)
                )
                assert dickson_D(n, x, alpha) == total


# --- Mersenne primality


def test_mersenne_examples():
    assert llm_is_mersenne_prime(5).is_prime
    eleven = llm_is_mersenne_prime(11)
    assert not eleven.is_prime and eleven.modulus == 2047 == 23 * 89
    assert llm_is_mersenne_prime(13, "naive").is_prime
    assert llm_is_mersenne_prime(17, "fast").is_prime


@pytest.mark.parametrize("p", [p for p in range(5, 27) if is_prime(p)])
def test_mersenne_agrees_with_trial_division(p):
    truth = is_prime(2**p - 1)
    naive = llm_is_mersenne_prime(p, "naive")
    fast = llm_is_mersenne_prime(p, "fast")
    assert naive.is_prime == fast.is_prime == truth
    assert naive.residue == fast.residue
    assert naive.crosscheck in (None, True)


def test_mersenne_crosscheck_runs_for_small_exponents():
    assert llm_is_mersenne_prime(7).crosscheck is True
    assert llm_is_mersenne_prime(11).crosscheck is True
    assert llm_is_mersenne_prime(17).crosscheck is None


def test_mersenne_larger_exponents():
    known = {61, 89, 107, 127, 521, 607}
    for p in (61, 67, 89, 97, 107, 127, 521, 607):
        assert llm_is_mersenne_prime(p, "fast").is_prime == (p in known)


def test_mersenne_rejects_bad_input():
    for bad in (4, 9, 3, 2):
        with pytest.raises(ValueError):
            llm_is_mersenne_prime(bad)
    with pytest.raises(ValueError):
        llm_is_mersenne_prime(5, "slow")
    with pytest.raises(CapExceeded):
        llm_is_mersenne_prime(29, "naive")


def test_composite_witness():
    for p in (5, 7, 13):
        assert not llm_composite_witness(p, 1)
        assert not llm_composite_witness(p, -1)
    for offset in (1, -1):
        assert llm_composite_witness(11, offset) == (psi_mod((1, 4), 1024 + offset, 2047) == 0)
    with pytest.raises(ValueError):
        llm_composite_witness(11, 2)


@pytest.mark.parametrize("p", [p for p in range(5, 32) if is_prime(p)])
def test_composite_witness_never_fires_on_primes(p):
    if is_prime(2**p - 1):
        assert not llm_composite_witness(p, 1)
        assert not llm_composite_witness(p, -1)


# --- combinatorial identity


def test_combinatorial_identity():
    assert combinatorial_identity_check(1).witness["lhs"] == "1"
    assert combinatorial_identity_check(5).witness["rhs"] == str(2**2 * 3 * 1)
    assert combinatorial_identity_check(6).witness["rhs"] == str(2**2 * 5 * 3 * 1)
    assert all(combinatorial_identity_check(n).ok for n in range(1, 201))


# --- prime emergence


def test_emergence_examples():
    assert emergence_ratio(2, (1, 1)) == 60 == 3 * 4 * 5
    assert emergence_ratio(3, (1, 1)) == 15120 == 5 * 6 * 7 * 8 * 9
    for k in range(2, 9):
        p = PRIMES[k - 1]
        assert emergence_ratio(k, (0, -1)) == prod(range(p, 2 * p))


def test_emergence_over_quadratic_point():
    assert emergence_ratio(4, (1, sqrt(5))) == prod(range(7, 14))


def test_emergence_rejects_kernel_points():
    with pytest.raises(KernelPoint):
        emergence_ratio(3, (1, 0))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_emergence_ratio_is_point_independent(k, zeta, xi):
    assume((zeta, xi) != (0, 0))
    p = PRIMES[k - 1]
    assume(in_omega_space((zeta, xi), 2 * p))
    assert emergence_ratio(k, (zeta, xi)) == prod(range(p, 2 * p))


def test_next_prime_divides_and_combinations():
    report = second_fundamental_check(2, [(1, 1), (0, -1)], [2, -1])
    assert report.combination == 60 and report.p_next == 5 and report.ok
    report = second_fundamental_check(3)
    assert report.p_next == 7 and 15120 % 7 == 0 and report.ok
    for k in range(2, 9):
        assert second_fundamental_check(k).ok


def test_odd_primorial_divides():
    v = third_fundamental_check(2)
    assert v.ok and v.witness["odd_primorial"] == "15"
    assert all(third_fundamental_check(k).ok for k in range(2, 9))


def test_refined_quotient():
    two = gen1_check(2)
    assert two.status == "SKIPPED"
    assert two.witness["quotient"] == "1" and two.witness["counterexample"] == "True"
    three = gen1_check(3)
    assert three.ok and three.witness["quotient"] == "42"
    assert all(gen1_check(k).status == "PASS" for k in range(3, 9))


def test_apex_divisibility_example():
    v = gen2_check(2, (1, 1))
    assert v.ok and v.witness["apex"] == "120"


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.integers(-8, 8), st.integers(-8, 8))
def test_apex_divisibility_for_arbitrary_points(k, zeta, xi):
    assume((zeta, xi) != (0, 0))
    assert gen2_check(k, (zeta, xi)).ok


def test_apex_divisibility_at_kernel_points():
    for k in range(2, 9):
        assert omega_top((1, 0), 2 * PRIMES[k - 1]) == 0
        assert gen2_check(k, (1, 0)).ok


def test_fibonacci_variant_divisibility():
    assert prime_fib_check(2).witness["ratio"] == "20"
    assert prime_fib_check(3).witness["ratio"] == str(9 * 8 * 7 * 6)
    assert prime_fib_check(4).witness["ratio"] == str(13 * 12 * 11 * 10 * 9 * 8)
    assert all(prime_fib_check(k).ok for k in range(2, 9))
    assert fib_lambda_top(6) == 20 * FIB[6]


def test_bertrand_chains():
    two = {v.tag: v for v in bertrand_check(2)}
    assert two["space44"].status == "SKIPPED"
    assert two["space44e"].ok
    four = {v.tag: v for v in bertrand_check(4)}
    assert four["clear"].witness["divisor"] == str(3 * 5 * 7)
    for k in range(2, 9):
        assert all(v.ok for v in bertrand_check(k))


# --- periodicity


def test_periodicity_entries():
    rows = {(v.params["point"], v.params["n"]): v for v in psi_periodicity_tables(12)}
    assert rows["1,1", 3].witness["value"] == "-2"
    assert rows["1,-1", 9].witness["value"] == "0"
    assert rows["1,sqrt(5)", 2].witness["value"] == str(-sqrt(5))
    assert all(v.ok for v in rows.values())


def test_periodicity_tables_agree_up_to_120():
    assert all(v.ok for v in psi_periodicity_tables(120, quad_n_max=40))


def test_quadratic_point_against_fibonacci_lucas():
    # independent of the library's own case table
    for n in range(1, 51):
        h = n // 2
        expected = {
            0: QuadElem(LUC[h], 0, 5),
            1: QuadElem(LUC[h + 1], FIB[h], 5),
            2: QuadElem(0, -FIB[h], 5),
            3: QuadElem(-LUC[h], -FIB[h + 1], 5),
        }[n % 4]
        assert omega_ratio((1, sqrt(5)), n) == expected

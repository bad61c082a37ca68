"""Verification suites driven by ``omegalab verify``.

Each builder returns a list of :class:`Verdict` records already tagged with
their suite name; the caller sorts and emits them.
"""
from __future__ import annotations

from math import factorial

from .config import Caps, resolve
from .number_theory import (
    EMERGENCE_POINTS,
    bertrand_check,
    chebyshev_T,
    combinatorial_identity_check,
    dickson_D,
    fermat_via_omega,
    fib_lucas_oscillating,
    fibonacci_via_lambda,
    gen1_check,
    gen2_check,
    is_prime_trial,
    kth_prime,
    llm_is_mersenne_prime,
    lucas_via_omega,
    mersenne_via_omega,
    prime_fib_check,
    psi_periodicity_tables,
    second_fundamental_check,
    third_fundamental_check,
)
from .omega import falling_product, in_omega_space, omega_table, omega_top
from .psi import (
    lambda_omega_bridge,
    lambda_table,
    psi,
    psi_sum,
    verify_derivative_recurrences,
    verify_ex00,
    verify_scaling,
    verify_sums_of_powers,
)
from .report import Verdict

SUITES = ("identities", "tables", "emergence", "all")

DEFAULT_N_MAX = {"identities": 12, "tables": 200}
DEFAULT_K_MAX = 8
QUAD_N_MAX = 50
GRID = 5


def integer_grid(radius: int):
    return [(a, b) for a in range(-radius, radius + 1) for b in range(-radius, radius + 1) if (a, b) != (0, 0)]


def first_fundamental(n: int, radius: int = GRID, *, caps: Caps | None = None) -> Verdict:
    """Omega apex / falling product equals Psi by recurrence and by explicit sum, on a point grid."""
    fall = falling_product(n)
    bad = []
    for point in integer_grid(radius):
        top = omega_top(point, n, caps=caps)
        if top % fall or top // fall != psi(point, n) or top // fall != psi_sum(point, n):
            bad.append(point)
    return Verdict.of("k00", {"n": n}, not bad, points=len(integer_grid(radius)), failed=bad)


def lambda_checks(n: int, point=(2, -3), *, caps: Caps | None = None) -> list:
    """Lambda entries are divisible by k! and agree with the Omega bridge."""
    lt = lambda_table(point, n, caps=caps)
    ot = omega_table(point, n, caps=caps)
    fd1 = all(v % factorial(k) == 0 for r, k, v in lt.entries())
    h2 = all(v == lambda_omega_bridge(point, n, r, k, table=ot) for r, k, v in lt.entries())
    params = {"n": n, "point": f"{point[0]},{point[1]}"}
    return [Verdict.of("FD1", params, fd1), Verdict.of("H2", params, h2)]


def identities_suite(n_max: int | None = None, *, caps: Caps | None = None) -> list:
    caps = resolve(caps)
    n_max = DEFAULT_N_MAX["identities"] if n_max is None else n_max
    out = []
    for n in range(1, n_max + 1):
        out.append(verify_ex00(n, caps=caps))
        out.append(verify_sums_of_powers(n, caps=caps))
        out.append(verify_derivative_recurrences(n, caps=caps))
        out.append(verify_scaling(n, caps=caps))
        out.extend(lambda_checks(n, caps=caps))
    return [v.with_suite("identities") for v in out]


def _fib_lucas_seq(count: int):
    fib, luc = [0, 1], [2, 1]
    while len(fib) <= count:
        fib.append(fib[-1] + fib[-2])
        luc.append(luc[-1] + luc[-2])
    return fib, luc


def representation_checks(n_max: int, *, caps: Caps | None = None) -> list:
    caps = resolve(caps)
    out = []
    for p in range(1, min(n_max, 25) + 1, 2):
        got = mersenne_via_omega(p, caps=caps)
        out.append(Verdict.of("WQ11", {"p": p}, got == 2**p - 1, value=got))
    for n in range(1, min(caps.fermat_n, 5) + 1):
        got = fermat_via_omega(n, caps=caps)
        out.append(Verdict.of("fermat", {"n": n}, got == 2 ** (2**n) + 1, value=got))
    top = min(n_max, 50)
    fib, luc = _fib_lucas_seq(top)
    for n in range(1, top + 1):
        osc = fib[n] if n % 2 else luc[n]
        out.append(Verdict.of("lucas", {"n": n}, lucas_via_omega(n, caps=caps) == luc[n], expected=luc[n]))
        out.append(Verdict.of("oscFL", {"n": n}, fib_lucas_oscillating(n, caps=caps) == osc, expected=osc))
        out.append(Verdict.of("fibLambda", {"n": n}, fibonacci_via_lambda(n, caps=caps) == fib[n], expected=fib[n]))
    out.extend(chebyshev_dickson_checks(min(n_max, 30), caps=caps))
    for p in (p for p in range(5, min(caps.mersenne_naive_p, 26) + 1) if is_prime_trial(p)):
        naive = llm_is_mersenne_prime(p, "naive", caps=caps)
        fast = llm_is_mersenne_prime(p, "fast", caps=caps)
        truth = is_prime_trial(2**p - 1)
        ok = naive.is_prime == fast.is_prime == truth and naive.crosscheck in (None, True)
        out.append(Verdict.of("U14", {"p": p}, ok, is_prime=truth, residue=naive.residue))
    return out


def chebyshev_dickson_checks(n_max: int, radius: int = 4, *, caps: Caps | None = None) -> list:
    out = []
    for x in range(-radius, radius + 1):
        t_prev, t_cur = 1, x
        ok = True
        for n in range(0, n_max + 1):
            ok &= chebyshev_T(n, x, caps=caps) == t_prev
            t_prev, t_cur = t_cur, 2 * x * t_cur - t_prev
        out.append(Verdict.of("cheb", {"x": x, "n_max": n_max}, ok))
        for alpha in range(-radius, radius + 1):
            d_prev, d_cur = x, x * x - 2 * alpha
            ok = True
            for n in range(1, n_max + 1):
                ok &= dickson_D(n, x, alpha, caps=caps) == d_prev
                d_prev, d_cur = d_cur, x * d_cur - alpha * d_prev
            out.append(Verdict.of("dickson", {"x": x, "alpha": alpha, "n_max": n_max}, ok))
    return out


def tables_suite(n_max: int | None = None, *, caps: Caps | None = None) -> list:
    caps = resolve(caps)
    n_max = DEFAULT_N_MAX["tables"] if n_max is None else n_max
    out = psi_periodicity_tables(n_max, quad_n_max=min(n_max, QUAD_N_MAX), caps=caps)
    out += [combinatorial_identity_check(n) for n in range(1, n_max + 1)]
    out += [first_fundamental(n, caps=caps) for n in range(1, min(n_max, 60) + 1)]
    out += representation_checks(n_max, caps=caps)
    return [v.with_suite("tables") for v in out]


GEN22_POINTS = ((1, 1), (1, 0), (2, 3), (0, -1), (-3, 4))


def emergence_suite(k_max: int | None = None, *, caps: Caps | None = None) -> list:
    caps = resolve(caps)
    k_max = DEFAULT_K_MAX if k_max is None else k_max
    out = []
    for k in range(2, k_max + 1):
        n = 2 * kth_prime(k, caps=caps)
        members = tuple(pt for pt in EMERGENCE_POINTS if in_omega_space(pt, n))
        out.extend(second_fundamental_check(k, members, caps=caps).verdicts())
        out.append(third_fundamental_check(k, members, caps=caps))
        out.append(gen1_check(k, caps=caps))
        out.extend(gen2_check(k, pt, caps=caps) for pt in GEN22_POINTS)
        out.append(prime_fib_check(k, caps=caps))
        out.extend(bertrand_check(k, caps=caps))
    return [v.with_suite("emergence") for v in out]


def run_suite(name: str, n_max: int | None = None, k_max: int | None = None, *, caps: Caps | None = None) -> list:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    out = []
    if name in ("identities", "all"):
        out += identities_suite(n_max, caps=caps)
    if name in ("tables", "all"):
        out += tables_suite(n_max if name == "tables" else None, caps=caps)
    if name in ("emergence", "all"):
        out += emergence_suite(k_max, caps=caps)
    return sorted(out, key=Verdict.sort_key)

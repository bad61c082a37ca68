"""Number-theoretic consequences of the Omega and Psi machinery.

Classical sequences and polynomials appear as Omega apex ratios at special
points; the same ratios drive a Mersenne primality test and the next-prime
divisibility checks.  Prime lookup uses a plain sieve and trial division,
independent of everything else in the package.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt, prod

from .config import Caps, resolve
from .exactmath import NotDivisible, QuadElem, as_integer, exact_div, zero_like
from .omega import (
    as_point,
    column_sweep,
    delta,
    falling_product,
    omega_ratio,
    omega_top,
)
from .psi import psi, psi_mod, psi_mod_fast
from .report import Verdict

__all__ = [
    "PrimeIndexer",
    "EmergenceReport",
    "MersenneVerdict",
    "KernelPoint",
    "primes_upto",
    "kth_prime",
    "is_prime_trial",
    "mersenne_via_omega",
    "fermat_via_omega",
    "lucas_via_omega",
    "fib_lucas_oscillating",
    "fib_lambda_top",
    "fibonacci_via_lambda",
    "chebyshev_T",
    "dickson_D",
    "llm_is_mersenne_prime",
    "llm_composite_witness",
    "combinatorial_identity_check",
    "emergence_ratio",
    "second_fundamental_check",
    "third_fundamental_check",
    "gen1_check",
    "gen2_check",
    "prime_fib_check",
    "bertrand_check",
    "psi_periodicity_tables",
    "EMERGENCE_POINTS",
]


class KernelPoint(ValueError):
    """The point has Psi = 0 at the requested level, so a ratio is undefined."""


# ---------------------------------------------------------------------------
# primes (oracle side: no Omega/Psi code below this line is used here)


@dataclass(frozen=True)
class PrimeIndexer:
    bound: int
    primes: tuple

    def kth_prime(self, k: int) -> int:
        """``p_1 = 2, p_2 = 3, ...``"""
        if k < 1:
            raise ValueError("prime index starts at 1")
        if k > len(self.primes):
            raise IndexError(f"p_{k} exceeds the sieve bound {self.bound}")
        return self.primes[k - 1]

    def __contains__(self, n: int) -> bool:
        if n > self.bound:
            raise ValueError(f"{n} exceeds the sieve bound {self.bound}")
        lo, hi = 0, len(self.primes)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.primes[mid] < n:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(self.primes) and self.primes[lo] == n


@lru_cache(maxsize=32)
def _sieve(bound: int) -> tuple:
    if bound < 2:
        return ()
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_upto(bound: int, *, caps: Caps | None = None) -> PrimeIndexer:
    resolve(caps).check("sieve_bound", bound, "sieve bound")
    return PrimeIndexer(bound, _sieve(bound))


def kth_prime(k: int, *, caps: Caps | None = None) -> int:
    caps = resolve(caps)
    bound = 64
    while True:
        bound = min(bound, caps.sieve_bound)
        primes = _sieve(bound)
        if len(primes) >= k:
            return primes[k - 1]
        if bound == caps.sieve_bound:
            raise IndexError(f"p_{k} exceeds the sieve bound {bound}")
        bound *= 2


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# representations


def mersenne_via_omega(p: int, *, caps: Caps | None = None) -> int:
    """``2^p - 1`` as the Omega ratio at (-2, -5), for odd ``p``."""
    if p < 1 or p % 2 == 0:
        raise ValueError(f"p must be an odd positive integer, got {p}")
    return omega_ratio((-2, -5), p, caps=caps)


def fermat_via_omega(n: int, *, caps: Caps | None = None) -> int:
    """``2^(2^n) + 1`` as the Omega ratio at (-2, -5) with index ``2^n``."""
    caps = resolve(caps)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    caps.check("fermat_n", n, "Fermat index")
    return omega_ratio((-2, -5), 2**n, caps=caps)


def lucas_via_omega(n: int, *, caps: Caps | None = None) -> int:
    return omega_ratio((-1, -3), n, caps=caps)


def fib_lucas_oscillating(n: int, *, caps: Caps | None = None) -> int:
    """F(n) for odd n, L(n) for even n."""
    return omega_ratio((1, -3), n, caps=caps)


def fib_lambda_top(n: int, *, caps: Caps | None = None) -> int:
    """Apex of the Fibonacci variant table (depth ``(n-1)//2``).

        L_r(k) = (n-r-k) L_r(k-1) + 2 (n-1-2r-delta(n)) L_{r+1}(k-1)
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    depth = (n - 1) // 2
    resolve(caps).check("omega_half", depth, "floor((n-1)/2)")
    dn = delta(n)
    col = None
    for col in column_sweep(1, -2, n, depth, lambda r: n - 1 - 2 * r - dn, 1):
        pass
    return col[0]


def fibonacci_via_lambda(n: int, *, caps: Caps | None = None) -> int:
    depth = (n - 1) // 2
    top = fib_lambda_top(n, caps=caps)
    return exact_div(top, prod(range(n - depth, n)))


def chebyshev_T(n: int, x, *, caps: Caps | None = None) -> Fraction:
    """First-kind Chebyshev value at a rational ``x``."""
    x = Fraction(x)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return Fraction(1)
    ratio = omega_ratio((1, 2 - 4 * x * x), n, caps=caps)
    return Fraction(x ** delta(n) * ratio) / 2 ** delta(n - 1)


def dickson_D(n: int, x, alpha, *, caps: Caps | None = None):
    """First-kind Dickson value ``D_n(x, alpha)``; symbolic inputs give a polynomial."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    zeta, xi = alpha, 2 * alpha - x * x
    if not zeta and not xi:
        return zero_like(x)
    ratio = omega_ratio((zeta, xi), n, caps=caps)
    return x * ratio if delta(n) else ratio


# ---------------------------------------------------------------------------
# Mersenne primality


@dataclass(frozen=True)
class MersenneVerdict:
    p: int
    modulus: int
    residue: int
    is_prime: bool
    method: str
    crosscheck: bool | None = None  # exact Omega-ratio forms agree (small p only)

    def __str__(self):
        word = "PRIME" if self.is_prime else "COMPOSITE"
        return f"{word} p={self.p} M={self.modulus} residue={self.residue}"


@lru_cache(maxsize=8)
def _exact_apex(zeta: int, xi: int, n: int) -> int:
    return omega_top((zeta, xi), n, caps=Caps(omega_half=n // 2))


def _require_prime_exponent(p: int) -> None:
    if not isinstance(p, int) or p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p!r}")
    if not is_prime_trial(p):
        raise ValueError(f"p must be prime, got {p}")


def llm_is_mersenne_prime(p: int, method: str = "fast", *, caps: Caps | None = None) -> MersenneVerdict:
    """Decide whether ``2^p - 1`` is prime via ``2^p - 1 | Psi(1, 4, 2^(p-1))``."""
    caps = resolve(caps)
    _require_prime_exponent(p)
    if method == "naive":
        caps.check("mersenne_naive_p", p, "p")
        reduce = psi_mod
    elif method == "fast":
        caps.check("mersenne_fast_p", p, "p")
        reduce = psi_mod_fast
    else:
        raise ValueError(f"method must be 'naive' or 'fast', got {method!r}")
    n = 2 ** (p - 1)
    modulus = 2 * n - 1
    residue = reduce((1, 4), n, modulus)
    is_prime = residue == 0
    crosscheck = None
    if p <= caps.mersenne_crosscheck_p:
        crosscheck = _crosscheck(p, n, is_prime)
    return MersenneVerdict(p, modulus, residue, is_prime, method, crosscheck)


def _crosscheck(p: int, n: int, is_prime: bool) -> bool:
    # ratio form: (Omega ratio at (-2,-5), p) | (Omega ratio at (1,4), n)
    top_n = _exact_apex(1, 4, n)
    top_p = omega_top((-2, -5), p)
    fall_n, fall_p = falling_product(n), falling_product(p)
    ratio_p = exact_div(top_p, fall_p)
    ratio_n = exact_div(top_n, fall_n)
    ratio_form = ratio_n % ratio_p == 0
    # product form, with the (0,-1) apexes written as falling products
    product_form = (top_n * fall_p) % (fall_n * top_p) == 0
    return ratio_form == is_prime and product_form == is_prime and ratio_p == 2 * n - 1


def llm_composite_witness(p: int, offset: int, *, caps: Caps | None = None) -> bool:
    """True when ``2^p - 1`` divides ``Psi(1, 4, 2^(p-1) + offset)``.

    A true result certifies that ``2^p - 1`` is composite; false proves nothing.
    """
    caps = resolve(caps)
    _require_prime_exponent(p)
    if offset not in (1, -1):
        raise ValueError("offset must be +1 or -1")
    caps.check("mersenne_fast_p", p, "p")
    n = 2 ** (p - 1)
    return psi_mod_fast((1, 4), n + offset, 2 * n - 1) == 0


# ---------------------------------------------------------------------------
# combinatorial identity


def combinatorial_identity_check(n: int) -> Verdict:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    m = n // 2
    top = n + delta(n - 1)
    rhs = 2 ** (m - delta(n + 1)) * prod(top - 2 * lam for lam in range(1, m + 1))
    lhs = falling_product(n)
    return Verdict.of("AU8", {"n": n}, lhs == rhs, lhs=lhs, rhs=rhs)


# ---------------------------------------------------------------------------
# prime emergence

EMERGENCE_POINTS = ((1, 1), (0, -1), (1, 4), (-2, -5))


def _point_label(point) -> str:
    zeta, xi = as_point(point)
    return f"{zeta},{xi}"


def emergence_ratio(k: int, point, *, caps: Caps | None = None) -> int:
    """``W_0(p_k | point | 2 p_k) / Psi(point, 2 p_k)``, an exact integer."""
    if k < 2:
        raise ValueError("k must be at least 2")
    p = kth_prime(k, caps=caps)
    n = 2 * p
    ps = psi(point, n)
    if not ps:
        raise KernelPoint(f"Psi{tuple(as_point(point))} vanishes at n={n}")
    value = exact_div(omega_top(point, n, caps=caps), ps)
    try:
        return as_integer(value)
    except ValueError:
        raise NotDivisible(value, 1, value) from None


@dataclass(frozen=True)
class EmergenceReport:
    k: int
    p_k: int
    p_next: int
    points: tuple
    ratios: tuple
    expected: int
    coeffs: tuple = ()
    combination: int = 0
    divides: tuple = field(default=())

    @property
    def ratios_match(self) -> bool:
        return all(r == self.expected for r in self.ratios)

    @property
    def combination_divides(self) -> bool:
        return self.combination % self.p_next == 0

    @property
    def ok(self) -> bool:
        return self.ratios_match and all(self.divides) and self.combination_divides

    def verdicts(self) -> list:
        out = []
        for point, ratio, div in zip(self.points, self.ratios, self.divides):
            params = {"k": self.k, "point": _point_label(point)}
            out.append(Verdict.of("space444", params, ratio == self.expected, ratio=ratio))
            out.append(Verdict.of("space6", params, div, p_next=self.p_next, ratio=ratio))
        out.append(
            Verdict.of(
                "space8",
                {"k": self.k, "coeffs": ",".join(map(str, self.coeffs))},
                self.combination_divides,
                combination=self.combination,
                p_next=self.p_next,
            )
        )
        return out


def second_fundamental_check(k: int, points=EMERGENCE_POINTS, coeffs=None, *, caps: Caps | None = None) -> EmergenceReport:
    """Each ratio, and the integer combination ``sum coeffs[i] * ratio[i]``, is divisible by ``p_{k+1}``."""
    points = tuple(points)
    coeffs = tuple(coeffs) if coeffs is not None else tuple(range(1, len(points) + 1))
    if len(coeffs) != len(points):
        raise ValueError("need one coefficient per point")
    p = kth_prime(k, caps=caps)
    p_next = kth_prime(k + 1, caps=caps)
    ratios = tuple(emergence_ratio(k, pt, caps=caps) for pt in points)
    return EmergenceReport(
        k=k,
        p_k=p,
        p_next=p_next,
        points=points,
        ratios=ratios,
        expected=prod(range(p, 2 * p)),
        coeffs=coeffs,
        combination=sum(c * r for c, r in zip(coeffs, ratios)),
        divides=tuple(r % p_next == 0 for r in ratios),
    )


def third_fundamental_check(k: int, points=EMERGENCE_POINTS, coeffs=None, *, caps: Caps | None = None) -> Verdict:
    """``p_2 p_3 ... p_{k+1}`` divides every ratio and every integer combination."""
    points = tuple(points)
    coeffs = tuple(coeffs) if coeffs is not None else tuple(range(1, len(points) + 1))
    primorial = prod(kth_prime(i, caps=caps) for i in range(2, k + 2))
    ratios = [emergence_ratio(k, pt, caps=caps) for pt in points]
    combination = sum(c * r for c, r in zip(coeffs, ratios))
    ok = all(r % primorial == 0 for r in ratios) and combination % primorial == 0
    return Verdict.of("gen7", {"k": k}, ok, odd_primorial=primorial, combination=combination)


def gen1_check(k: int, point=(1, 1), *, caps: Caps | None = None) -> Verdict:
    """``p_{k+1} | ratio / (p_k (2p_k - 1)(2p_k - 2))``.

    At k = 2 the quotient is 1; that instance is reported as skipped, with the
    quotient as the counterexample witness.
    """
    p = kth_prime(k, caps=caps)
    p_next = kth_prime(k + 1, caps=caps)
    ratio = emergence_ratio(k, point, caps=caps)
    quotient = exact_div(ratio, p * (2 * p - 1) * (2 * p - 2))
    params = {"k": k, "point": _point_label(point)}
    if k < 3:
        return Verdict.skipped(
            "gen111", params, counterexample=quotient % p_next != 0, quotient=quotient, p_next=p_next
        )
    return Verdict.of("gen111", params, quotient % p_next == 0, quotient=quotient, p_next=p_next)


def gen2_check(k: int, point, *, caps: Caps | None = None) -> Verdict:
    """``p_{k+1} | W_0(p_k | point | 2 p_k)`` for any integer point, kernel points included."""
    p = kth_prime(k, caps=caps)
    p_next = kth_prime(k + 1, caps=caps)
    top = as_integer(omega_top(point, 2 * p, caps=caps))
    return Verdict.of(
        "gen22", {"k": k, "point": _point_label(point)}, top % p_next == 0, p_next=p_next, apex=top
    )


def prime_fib_check(k: int, *, caps: Caps | None = None) -> Verdict:
    p = kth_prime(k, caps=caps)
    p_next = kth_prime(k + 1, caps=caps)
    top = fib_lambda_top(2 * p, caps=caps)
    ratio = exact_div(top, _fibonacci(2 * p))
    return Verdict.of("primeFib", {"k": k}, ratio % p_next == 0, ratio=ratio, p_next=p_next)


def _fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def bertrand_check(k: int, *, caps: Caps | None = None) -> list:
    """Divisibility chains behind the emergence theorems, with no Omega involved."""
    if k < 2:
        raise ValueError("k must be at least 2")
    p = kth_prime(k, caps=caps)
    p_next = kth_prime(k + 1, caps=caps)
    odd_primes = prod(kth_prime(i, caps=caps) for i in range(2, k + 1))
    odd_primes_next = odd_primes * p_next
    fall = falling_product(2 * p)
    params = {"k": k}
    out = []
    inner = prod(range(p + 1, 2 * p - 2))
    if k < 3:
        out.append(Verdict.skipped("space44", params, product="empty", p_next=p_next))
    else:
        out.append(Verdict.of("space44", params, inner % p_next == 0, p_next=p_next))
    out.append(Verdict.of("space44e", params, prod(range(p, 2 * p)) % p_next == 0, p_next=p_next))
    odd_double_factorial = prod(range(1, 2 * p, 2))
    out.append(Verdict.of("clear", params, odd_double_factorial % odd_primes == 0, divisor=odd_primes))
    out.append(Verdict.of("clear2", params, fall % odd_primes == 0, divisor=odd_primes))
    out.append(Verdict.of("clear3", params, fall % p_next == 0, p_next=p_next))
    out.append(Verdict.of("clear4", params, fall % odd_primes_next == 0, divisor=odd_primes_next))
    return out


# ---------------------------------------------------------------------------
# periodicity tables


def _fib_lucas(n: int) -> tuple:
    """(F(n), L(n)) by the two-term recurrences."""
    f0, f1 = 0, 1
    l0, l1 = 2, 1
    for _ in range(n):
        f0, f1 = f1, f0 + f1
        l0, l1 = l1, l0 + l1
    return f0, l0


def _expected_1_1(n):
    return {0: 2, 1: 1, 2: -1, 3: -2}[min(n % 6, -n % 6)]


def _expected_1_0(n):
    return {0: 2, 1: 1, 2: 0, 3: -1, 4: -2}[min(n % 8, -n % 8)]


def _expected_1_minus1(n):
    return {0: 2, 1: 1, 2: 1, 3: 0, 4: -1, 5: -1, 6: -2}[min(n % 12, -n % 12)]


def _expected_1_minus2(n):
    return 2 ** delta(n + 1)


def _expected_1_2(n):
    return (-1) ** (n // 2) * 2 ** delta(n - 1) * n ** delta(n)


def _expected_1_root5(n):
    r = n % 4
    if r == 0:
        return QuadElem(_fib_lucas(n // 2)[1], 0, 5)
    if r == 1:
        return QuadElem(_fib_lucas((n + 1) // 2)[1], _fib_lucas((n - 1) // 2)[0], 5)
    if r == 2:
        return QuadElem(0, -_fib_lucas(n // 2)[0], 5)
    return QuadElem(-_fib_lucas((n - 1) // 2)[1], -_fib_lucas((n + 1) // 2)[0], 5)


_TABLES = (
    ("PP1", (1, 1), "1,1", _expected_1_1),
    ("PP1Q", (1, 0), "1,0", _expected_1_0),
    ("PP1A", (1, -1), "1,-1", _expected_1_minus1),
    ("ABAB", (1, -2), "1,-2", _expected_1_minus2),
    ("AU10", (1, 2), "1,2", _expected_1_2),
    ("FL1", (1, QuadElem(0, 1, 5)), "1,sqrt(5)", _expected_1_root5),
)


def psi_periodicity_tables(n_max: int, *, quad_n_max: int | None = None, caps: Caps | None = None) -> list:
    """Omega ratios at the special points against their closed-form case tables.

    The sqrt(5) point is only evaluated up to ``quad_n_max`` (defaults to ``n_max``).
    """
    resolve(caps).check("omega_half", n_max // 2, "floor(n_max/2)")
    quad_n_max = n_max if quad_n_max is None else quad_n_max
    out = []
    for tag, point, label, expected in _TABLES:
        limit = quad_n_max if isinstance(point[1], QuadElem) else n_max
        for n in range(1, limit + 1):
            value = omega_ratio(point, n, caps=caps)
            want = expected(n)
            out.append(Verdict.of(tag, {"point": label, "n": n}, value == want, value=value, expected=want))
    return out

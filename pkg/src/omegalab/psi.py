"""Psi sequences and the two-row coefficients built on them.

``psi(a, b, n)`` follows the two-term recurrence

    Psi(0) = 2,  Psi(1) = 1,  Psi(n+1) = (2a - b)^(n mod 2) Psi(n) - a Psi(n-1)

and works over any exact ring.  Two-row coefficients are obtained from the
Omega table of ``(alpha, beta)``; formal differentiation is only used by the
``verify_*`` functions, which expand everything as :class:`MultiPoly`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .config import Caps, resolve
from .exactmath import MultiPoly, exact_div, one_like, variables, zero_like
from .omega import OmegaTable, delta, omega_ratio, omega_table
from .report import Verdict

__all__ = [
    "PsiParams",
    "TwoRowParams",
    "HomogenizationPair",
    "LambdaTable",
    "psi",
    "psi_sum",
    "psi_mod",
    "psi_mod_fast",
    "lambda_table",
    "lambda_omega_bridge",
    "psi_two_row",
    "psi_two_rows",
    "theta_sum",
    "theta_sum_homogenized",
    "theta_sum_shifted",
    "theta_sum_shifted_homogenized",
    "ex00_sides",
    "verify_ex00",
    "verify_sums_of_powers",
    "verify_derivative_recurrences",
    "verify_scaling",
]


@dataclass(frozen=True)
class PsiParams:
    a: object
    b: object

    def __post_init__(self):
        if not self.a and not self.b:
            raise ValueError("(a, b) = (0, 0) is excluded")

    def __iter__(self):
        return iter((self.a, self.b))


@dataclass(frozen=True)
class TwoRowParams:
    a: object
    b: object
    alpha: object
    beta: object

    def __iter__(self):
        return iter((self.a, self.b, self.alpha, self.beta))

    @property
    def det(self):
        """``beta*a - alpha*b``; the expansions need it non-zero."""
        return self.beta * self.a - self.alpha * self.b


@dataclass(frozen=True)
class HomogenizationPair:
    """Scalars multiplying the two quadratic forms (named apart from the Omega ``xi``)."""

    xiS: object
    etaS: object


def _params(p) -> PsiParams:
    return p if isinstance(p, PsiParams) else PsiParams(*p)


def _two_row(p) -> TwoRowParams:
    p = p if isinstance(p, TwoRowParams) else TwoRowParams(*p)
    if not p.det:
        raise ValueError("beta*a - alpha*b must be non-zero")
    return p


# ---------------------------------------------------------------------------
# Psi itself


def psi(params, n: int):
    """Psi(a, b, n) by the defining recurrence; O(n) ring operations."""
    a, b = _params(params)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    c = 2 * a - b
    one = one_like(c)
    prev, cur = 2 * one, one
    if n == 0:
        return prev
    for i in range(1, n):
        step = c * cur if i % 2 else cur
        prev, cur = cur, step - a * prev
    return cur


def _lucas_weight(n: int, i: int) -> int:
    # n/(n-i) * C(n-i, i), always an integer
    return n * comb(n - i, i) // (n - i)


def psi_sum(params, n: int):
    """Psi(a, b, n) as the explicit finite sum over ``i <= n // 2``."""
    a, b = _params(params)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    m = n // 2
    c = 2 * a - b
    total = zero_like(c)
    for i in range(m + 1):
        total = total + _lucas_weight(n, i) * (-a) ** i * c ** (m - i)
    return total


def psi_mod(params, n: int, modulus: int) -> int:
    """Psi(a, b, n) mod ``modulus`` by the recurrence, reducing every step."""
    a, b = _params(params)
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    a %= modulus
    c = (2 * a - b) % modulus
    prev, cur = 2 % modulus, 1 % modulus
    if n == 0:
        return prev
    for i in range(1, n):
        step = c * cur if i & 1 else cur
        prev, cur = cur, (step - a * prev) % modulus
    return cur


def _mat_mul(x, y, m):
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return (
        ((a * e + b * g) % m, (a * f + b * h) % m),
        ((c * e + d * g) % m, (c * f + d * h) % m),
    )


def psi_mod_fast(params, n: int, modulus: int) -> int:
    """Same value as :func:`psi_mod` in O(log n) 2x2 matrix products.

    Two consecutive recurrence steps form a fixed linear map
    ``(Psi(2j), Psi(2j+1)) -> (Psi(2j+2), Psi(2j+3))``.
    """
    a, b = _params(params)
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    a %= modulus
    c = (2 * a - b) % modulus
    step = ((-a % modulus, c), (-a % modulus, (c - a) % modulus))
    power = ((1, 0), (0, 1))
    j = n // 2
    while j:
        if j & 1:
            power = _mat_mul(step, power, modulus)
        step = _mat_mul(step, step, modulus)
        j >>= 1
    row = power[n % 2]
    return (row[0] * 2 + row[1]) % modulus


# ---------------------------------------------------------------------------
# lambda coefficients and the bridge to Omega


@dataclass(frozen=True)
class LambdaTable:
    n: int
    point: tuple
    columns: tuple  # columns[k][r]

    def __getitem__(self, rk):
        r, k = rk
        m = self.n // 2
        if r < 0 or k < 0 or r + k > m:
            raise IndexError(f"(r={r}, k={k}) lies outside the triangle r + k <= {m}")
        return self.columns[k][r]

    def entries(self):
        for k, col in enumerate(self.columns):
            for r, value in enumerate(col):
                yield r, k, value


def lambda_table(point, n: int, *, caps: Caps | None = None) -> LambdaTable:
    alpha, beta = point
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    m = n // 2
    resolve(caps).check("omega_half", m, "floor(n/2)")
    c = 2 * alpha - beta
    one = one_like(c)
    col = [(-1) ** r * _lucas_weight(n, r) * one for r in range(m + 1)]
    cols = [tuple(col)]
    for k in range(1, m + 1):
        col = [
            c * (m - k - r + 1) * col[r] + alpha * (r + 1) * col[r + 1]
            for r in range(m - k + 1)
        ]
        cols.append(tuple(col))
    return LambdaTable(n, (alpha, beta), tuple(cols))


def lambda_omega_bridge(point, n: int, r: int, k: int, *, table: OmegaTable | None = None):
    """lambda_r(k) recovered from the Omega entry through its factorial prefactor."""
    m = n // 2
    if r < 0 or k < 0 or r + k > m:
        raise IndexError(f"(r={r}, k={k}) lies outside the triangle for n={n}")
    if table is None:
        table = omega_table(point, n)
    num = (-1) ** r * n * factorial(n - r - k - 1) * factorial(m - r)
    den = factorial(n - 2 * r) * factorial(r) * factorial(m - r - k)
    return exact_div(num * table[r, k], den)


def psi_two_rows(params, n: int, *, table: OmegaTable | None = None) -> list:
    """All two-row coefficients ``Psi(a b n; alpha beta r)`` for ``r = 0..n//2``."""
    p = _two_row(params)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    m = n // 2
    if table is None:
        table = omega_table((p.alpha, p.beta), n)
    c = 2 * p.a - p.b
    a_pow = [one_like(c)]
    c_pow = [one_like(c)]
    for _ in range(m):
        a_pow.append(a_pow[-1] * p.a)
        c_pow.append(c_pow[-1] * c)
    rows = []
    for k in range(m + 1):
        total = zero_like(c)
        for r in range(m - k + 1):
            num = (-1) ** (r + k) * factorial(n - r - k - 1) * n * comb(m - r, k)
            den = factorial(n - 2 * r) * factorial(r)
            coeff = exact_div(num * table[r, k], den)
            total = total + coeff * a_pow[r] * c_pow[m - k - r]
        rows.append(total)
    return rows


def psi_two_row(params, n: int, r: int):
    """The coefficient of ``q1^(n//2 - r) q2^r`` in the two-row expansion."""
    m = n // 2
    if not 0 <= r <= m:
        raise IndexError(f"r={r} outside 0..{m}")
    return psi_two_rows(params, n)[r]


def theta_sum(params, theta, n: int):
    """``sum_r Psi_r * theta^r``; equals ``psi(a - alpha*theta, b - beta*theta, n)``."""
    rows = psi_two_rows(params, n)
    total = zero_like(rows[0])
    power = one_like(rows[0])
    for row in rows:
        total = total + row * power
        power = power * theta
    return total


def theta_sum_homogenized(params, pair: HomogenizationPair, n: int):
    """``sum_r Psi_r xiS^(m-r) etaS^r``; equals ``psi(a*xiS - alpha*etaS, b*xiS - beta*etaS, n)``."""
    rows = psi_two_rows(params, n)
    m = n // 2
    total = zero_like(rows[0])
    for r, row in enumerate(rows):
        total = total + row * pair.xiS ** (m - r) * pair.etaS**r
    return total


def theta_sum_shifted(params, theta, n: int, k: int):
    """``sum_{r>=k} C(r,k) Psi_r theta^(r-k)``; equals the k-th row at ``(a - alpha*theta, b - beta*theta)``."""
    rows = psi_two_rows(params, n)
    m = n // 2
    if not 0 <= k <= m:
        raise IndexError(f"k={k} outside 0..{m}")
    total = zero_like(rows[0])
    for r in range(k, m + 1):
        total = total + comb(r, k) * rows[r] * theta ** (r - k)
    return total


def theta_sum_shifted_homogenized(params, pair: HomogenizationPair, n: int, k: int):
    """Homogenized form of :func:`theta_sum_shifted`."""
    rows = psi_two_rows(params, n)
    m = n // 2
    if not 0 <= k <= m:
        raise IndexError(f"k={k} outside 0..{m}")
    total = zero_like(rows[0])
    for r in range(k, m + 1):
        total = total + comb(r, k) * rows[r] * pair.xiS ** (m - r) * pair.etaS ** (r - k)
    return total


# ---------------------------------------------------------------------------
# symbolic verification


def _symbolic_cap(n: int, caps: Caps | None) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    resolve(caps).check("symbolic_n", n, "n")


def ex00_sides(n: int, *, caps: Caps | None = None):
    """Both sides of the two-row expansion, cross-multiplied by ``(x+y)^delta(n)``.

    Returns ``(lhs, rhs)`` with

        lhs = (beta*a - alpha*b)^m (x^n + y^n)
        rhs = (x+y)^delta(n) * sum_r Psi_r q1^(m-r) q2^r
    """
    _symbolic_cap(n, caps)
    x, y, a, b, alpha, beta = variables("x", "y", "a", "b", "alpha", "beta")
    m = n // 2
    q1 = alpha * x**2 + beta * x * y + alpha * y**2
    q2 = a * x**2 + b * x * y + a * y**2
    rows = psi_two_rows((a, b, alpha, beta), n)
    lhs = (beta * a - alpha * b) ** m * (x**n + y**n)
    q1_pow = [MultiPoly.constant(1)]
    q2_pow = [MultiPoly.constant(1)]
    for _ in range(m):
        q1_pow.append(q1_pow[-1] * q1)
        q2_pow.append(q2_pow[-1] * q2)
    rhs = MultiPoly.constant(0)
    for r, row in enumerate(rows):
        rhs = rhs + row * q1_pow[m - r] * q2_pow[r]
    if delta(n):
        rhs = rhs * (x + y)
    return lhs, rhs


def verify_ex00(n: int, *, caps: Caps | None = None) -> Verdict:
    lhs, rhs = ex00_sides(n, caps=caps)
    return Verdict.of("ex00", {"n": n}, lhs == rhs, terms=len(lhs.terms))


def verify_sums_of_powers(n: int, *, caps: Caps | None = None) -> Verdict:
    """``x^n + y^n`` recovered from Psi at ``(xy, -x^2 - y^2)``; the binomial sum and the Omega ratio must agree."""
    _symbolic_cap(n, caps)
    x, y = variables("x", "y")
    target = x**n + y**n
    point = (x * y, -(x**2) - y**2)
    via_psi = psi(point, n)
    if delta(n):
        via_psi = via_psi * (x + y)
    binomial = MultiPoly.constant(0)
    for i in range(n // 2 + 1):
        binomial = binomial + (-1) ** i * _lucas_weight(n, i) * (x * y) ** i * (x + y) ** (n - 2 * i)
    via_omega = omega_ratio(point, n, caps=caps)
    if delta(n):
        via_omega = via_omega * (x + y)
    ww4, eq00, fa2 = via_psi == target, binomial == target, via_omega == target
    return Verdict.of(
        "WW4", {"n": n}, ww4 and eq00 and fa2, WW4=ww4, eq00=eq00, FA2=fa2
    )


def _directional(p: MultiPoly, first: str, second: str, c1, c2) -> MultiPoly:
    return c1 * p.partial(first) + c2 * p.partial(second)


def verify_derivative_recurrences(n: int, *, caps: Caps | None = None) -> Verdict:
    """Differential recurrences between neighbouring two-row coefficients, plus their iterated forms."""
    _symbolic_cap(n, caps)
    a, b, alpha, beta = variables("a", "b", "alpha", "beta")
    m = n // 2
    rows = psi_two_rows((a, b, alpha, beta), n)
    zero = MultiPoly.constant(0)

    def d_ab(p):  # alpha d/da + beta d/db
        return _directional(p, "a", "b", alpha, beta)

    def d_albe(p):  # a d/dalpha + b d/dbeta
        return _directional(p, "alpha", "beta", a, b)

    failures = []
    for r in range(m + 1):
        nxt = rows[r + 1] if r < m else zero
        if d_ab(rows[r]) != -(r + 1) * nxt:
            failures.append(f"diff1a r={r}")
        prv = rows[r - 1] if r > 0 else zero
        if d_albe(rows[r]) != -(m - r + 1) * prv:
            failures.append(f"diff1b r={r}")

    base_ab = psi((a, b), n)
    base_albe = psi((alpha, beta), n)
    if rows[0] != base_ab:
        failures.append("ex000")
    if rows[m] != (-1) ** m * base_albe:
        failures.append("ex111")
    deriv = base_ab
    for r in range(m + 1):
        if rows[r] != (-1) ** r * exact_div(deriv, factorial(r)):
            failures.append(f"diff3 r={r}")
        if r < m:
            deriv = d_ab(deriv)
    if exact_div(deriv, factorial(m)) != base_albe:
        failures.append("Aexp2")
    deriv = base_albe
    for j in range(m + 1):  # j = m - r derivatives
        r = m - j
        if rows[r] != (-1) ** r * exact_div(deriv, factorial(j)):
            failures.append(f"diff5 r={r}")
        deriv = d_albe(deriv)
    return Verdict.of(
        "diff1", {"n": n}, not failures, failed=";".join(failures) or "none"
    )


def verify_scaling(n: int, *, caps: Caps | None = None) -> Verdict:
    """The four scaling and row-swap laws with a symbolic scale ``lam``."""
    _symbolic_cap(n, caps)
    a, b, alpha, beta, lam = variables("a", "b", "alpha", "beta", "lam")
    m = n // 2
    rows = psi_two_rows((a, b, alpha, beta), n)
    scaled_lower = psi_two_rows((a, b, lam * alpha, lam * beta), n)
    scaled_upper = psi_two_rows((lam * a, lam * b, alpha, beta), n)
    swapped = psi_two_rows((alpha, beta, a, b), n)
    law1 = all(scaled_lower[r] == lam**r * rows[r] for r in range(m + 1))
    law2 = all(scaled_upper[r] == lam ** (m - r) * rows[r] for r in range(m + 1))
    law3 = all(rows[r] == (-1) ** m * swapped[m - r] for r in range(m + 1))
    law4 = lam**m * psi((a, b), n) == psi((lam * a, lam * b), n)
    return Verdict.of(
        "W22",
        {"n": n},
        law1 and law2 and law3 and law4,
        law1=law1,
        law2=law2,
        law3=law3,
        law4=law4,
    )


"""Reference values computed without any omegalab code.

Everything here is plain integer arithmetic written from the textbook
definitions, so tests can compare the library against it.
"""
from math import isqrt


def fibonacci(count):
    out = [0, 1]
    while len(out) <= count:
        out.append(out[-1] + out[-2])
    return out


def lucas(count):
    out = [2, 1]
    while len(out) <= count:
        out.append(out[-1] + out[-2])
    return out


def psi_by_squares(a, b, n):
    """Psi via the order-4 recurrence ``P(n) = -b P(n-2) - a^2 P(n-4)``.

    Both parity classes satisfy it; the four seeds come from unrolling the
    defining recurrence by hand.
    """
    seeds = [2, 1, -b, -a - b]
    vals = seeds[: n + 1]
    while len(vals) <= n:
        vals.append(-b * vals[-2] - a * a * vals[-4])
    return vals[n]


def omega_by_definition(zeta, xi, n):
    """Omega triangle as a dict ``{(r, k): value}`` filled cell by cell."""
    m = n // 2
    d1 = (n - 1) % 2
    w = {(r, 0): 1 for r in range(m + 1)}
    for k in range(1, m + 1):
        for r in range(m - k + 1):
            w[r, k] = (2 * zeta - xi) * (n - r - k) * w[r, k - 1] - 2 * zeta * (n - 2 * r - d1) * w[r + 1, k - 1]
    return w


def falling(n):
    out = 1
    for j in range(1, n // 2 + 1):
        out *= n - j
    return out


def is_prime(n):
    if n < 2:
        return False
    return all(n % f for f in range(2, isqrt(n) + 1))


def primes(count):
    out, c = [], 2
    while len(out) < count:
        if is_prime(c):
            out.append(c)
        c += 1
    return out


def chebyshev(n_max, x):
    t = [1, x]
    while len(t) <= n_max:
        t.append(2 * x * t[-1] - t[-2])
    return t


def dickson(n_max, x, alpha):
    d = [2, x]
    while len(d) <= n_max:
        d.append(x * d[-1] - alpha * d[-2])
    return d

"""Triangular Omega sequences attached to an index ``n`` and a point.

For a point ``(zeta, xi)`` the table is

    W_r(0) = 1
    W_r(k) = (2*zeta - xi) * (n - r - k) * W_r(k-1)
             - 2*zeta * (n - 2r - delta(n-1)) * W_{r+1}(k-1)

on the triangle ``r + k <= n // 2``.  Column ``k`` only needs column
``k - 1``, so the apex can be computed keeping two columns alive.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .config import Caps, resolve
from .exactmath import exact_div, one_like

__all__ = [
    "OmegaPoint",
    "OmegaTable",
    "as_point",
    "delta",
    "falling_product",
    "omega_table",
    "omega_top",
    "omega_ratio",
    "omega_closed_1_minus2",
    "omega_closed_1_2",
    "omega_closed_0_minus1",
    "in_omega_space",
    "in_kernel",
    "column_sweep",
]


def delta(n: int) -> int:
    """Parity indicator ``n mod 2`` (0 or 1, also for negative ``n``)."""
    return n % 2


@dataclass(frozen=True)
class OmegaPoint:
    zeta: object
    xi: object

    def __post_init__(self):
        if not self.zeta and not self.xi:
            raise ValueError("the point (0, 0) is excluded")

    def __iter__(self):
        return iter((self.zeta, self.xi))

    def __str__(self):
        return f"({self.zeta}, {self.xi})"


def as_point(point) -> OmegaPoint:
    if isinstance(point, OmegaPoint):
        return point
    zeta, xi = point
    return OmegaPoint(zeta, xi)


def _half(n: int, caps: Caps | None) -> int:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    m = n // 2
    resolve(caps).check("omega_half", m, "floor(n/2)")
    return m


def column_sweep(
    c, e, n: int, depth: int, row_factor: Callable[[int], int], one
) -> Iterator[list]:
    """Yield columns 0..depth of ``T_r(k) = c(n-r-k)T_r(k-1) - e*row_factor(r)*T_{r+1}(k-1)``.

    Column ``k`` has ``depth - k + 1`` entries.  Each yielded list is fresh,
    so callers may keep or drop it.
    """
    col = [one] * (depth + 1)
    yield col
    rf = [row_factor(r) for r in range(depth + 1)]
    for k in range(1, depth + 1):
        col = [
            c * (n - r - k) * col[r] - e * rf[r] * col[r + 1]
            for r in range(depth - k + 1)
        ]
        yield col


def _omega_columns(point: OmegaPoint, n: int, m: int):
    zeta, xi = point
    c = 2 * zeta - xi
    e = 2 * zeta
    d1 = delta(n - 1)
    return column_sweep(c, e, n, m, lambda r: n - 2 * r - d1, one_like(c))


@dataclass(frozen=True)
class OmegaTable:
    """Full triangle of an Omega sequence; ``table[r, k]`` reads an entry."""

    n: int
    point: OmegaPoint
    columns: tuple  # columns[k][r]

    @property
    def half(self) -> int:
        return self.n // 2

    def __getitem__(self, rk):
        r, k = rk
        m = self.half
        if r < 0 or k < 0 or r + k > m:
            raise IndexError(f"(r={r}, k={k}) lies outside the triangle r + k <= {m}")
        return self.columns[k][r]

    def entries(self) -> Iterator[tuple]:
        """``(r, k, value)`` in column order."""
        for k, col in enumerate(self.columns):
            for r, value in enumerate(col):
                yield r, k, value

    def __len__(self):
        return sum(len(col) for col in self.columns)

    @property
    def top(self):
        return self.columns[self.half][0]


def omega_table(point, n: int, *, caps: Caps | None = None) -> OmegaTable:
    point = as_point(point)
    m = _half(n, caps)
    cols = tuple(tuple(col) for col in _omega_columns(point, n, m))
    return OmegaTable(n, point, cols)


def omega_top(point, n: int, *, caps: Caps | None = None):
    """Apex entry ``W_0(n // 2)``, computed in O(n) memory."""
    point = as_point(point)
    m = _half(n, caps)
    col = None
    for col in _omega_columns(point, n, m):
        pass
    return col[0]


def falling_product(n: int) -> int:
    """``(n-1)(n-2)...(n - n//2)``; the empty product (n = 1) is 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = 1
    for j in range(n - n // 2, n):
        out *= j
    return out


def omega_ratio(point, n: int, *, caps: Caps | None = None):
    """``W_0(n//2) / falling_product(n)``; equals Psi at the point."""
    return exact_div(omega_top(point, n, caps=caps), falling_product(n))


def _check_triangle(r: int, k: int, n: int) -> None:
    if n < 1 or r < 0 or k < 0 or r + k > n // 2:
        raise IndexError(f"(r={r}, k={k}) lies outside the triangle for n={n}")


def omega_closed_1_minus2(r: int, k: int, n: int) -> int:
    """Entry of the table at (1, -2); does not depend on ``r``."""
    _check_triangle(r, k, n)
    top = n + delta(n - 1)
    out = 2**k
    for lam in range(1, k + 1):
        out *= top - 2 * lam
    return out


def omega_closed_1_2(r: int, k: int, n: int) -> int:
    """Entry of the table at (1, 2)."""
    _check_triangle(r, k, n)
    base = n - delta(n + 1) - 2 * r
    out = (-2) ** k
    for lam in range(k):
        out *= base - 2 * lam
    return out


def omega_closed_0_minus1(r: int, k: int, n: int) -> int:
    """Entry of the table at (0, -1)."""
    _check_triangle(r, k, n)
    out = 1
    for lam in range(1, k + 1):
        out *= n - r - lam
    return out


def in_omega_space(point, n: int) -> bool:
    """Whether Psi at the point is non-zero at level ``n``."""
    from .psi import psi

    zeta, xi = as_point(point)
    return bool(psi((zeta, xi), n))


def in_kernel(point, n: int) -> bool:
    return not in_omega_space(point, n)

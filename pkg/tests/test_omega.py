from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omegalab.config import Caps, CapExceeded
from omegalab.exactmath import QuadElem, sqrt
from omegalab.omega import (
    OmegaPoint,
    delta,
    falling_product,
    in_kernel,
    in_omega_space,
    omega_closed_0_minus1,
    omega_closed_1_2,
    omega_closed_1_minus2,
    omega_ratio,
    omega_table,
    omega_top,
)

from oracles import falling, omega_by_definition, psi_by_squares

# Written-out recurrences  T_r(k) = c (N-r-k) T_r(k-1) + s (N-2r-delta(N-1)) T_{r+1}(k-1)
# as (point, c, s, index map).
SPECIALISED = {
    "mersenne": ((-2, -5), 1, 4, lambda n: n),
    "lucas_lehmer": ((1, 4), -2, -2, lambda n: n),
    "period6": ((1, 1), 1, -2, lambda n: n),
    "period8": ((1, 0), 2, -2, lambda n: n),
    "period12": ((1, -1), 3, -2, lambda n: n),
    "power_of_two": ((1, -2), 4, -2, lambda n: n),
    "lucas": ((-1, -3), 1, 2, lambda n: n),
    "fermat": ((-2, -5), 1, 4, lambda n: 2**n),
    "fib_lucas": ((1, -3), 5, -2, lambda n: n),
}


def straight_line(c, s, big_n):
    m = big_n // 2
    d1 = (big_n - 1) % 2
    t = {(r, 0): 1 for r in range(m + 1)}
    for k in range(1, m + 1):
        for r in range(m - k + 1):
            t[r, k] = c * (big_n - r - k) * t[r, k - 1] + s * (big_n - 2 * r - d1) * t[r + 1, k - 1]
    return t


@pytest.mark.parametrize("name", sorted(SPECIALISED))
def test_specialised_tables_are_omega_tables(name):
    point, c, s, index = SPECIALISED[name]
    for n in range(1, 7 if name == "fermat" else 15):
        big_n = index(n)
        table = omega_table(point, big_n)
        assert dict(((r, k), v) for r, k, v in table.entries()) == straight_line(c, s, big_n)


def test_delta():
    assert [delta(n) for n in (0, 7, 16, -1)] == [0, 1, 0, 1]


def test_base_column_is_ones():
    for n in range(1, 12):
        table = omega_table((3, -7), n)
        assert all(table[r, 0] == 1 for r in range(n // 2 + 1))


def test_first_column_at_one_minus_two():
    for n in range(2, 20):
        table = omega_table((1, -2), n)
        assert all(table[r, 1] == 2 * (n + delta(n - 1) - 2) for r in range(n // 2))


def test_apex_at_one_one_six():
    assert omega_top((1, 1), 6) == 120 == omega_by_definition(1, 1, 6)[0, 3]


def test_apex_small_cases():
    assert omega_top((5, 2), 1) == 1
    for n in range(1, 30):
        assert omega_top((0, -1), n) == falling_product(n)
        sign = (-1) ** (n // 2)
        assert omega_top((1, 2), n) == sign * 2 ** delta(n - 1) * n ** delta(n) * falling_product(n)


def test_falling_product():
    assert falling_product(1) == 1
    assert falling_product(6) == 60
    assert falling_product(5) == 12
    with pytest.raises(ValueError):
        falling_product(0)


def test_ratio_examples():
    assert omega_ratio((1, 1), 6) == 2
    assert omega_ratio((-2, -5), 5) == 31
    assert omega_ratio((1, 0), 2) == 0


def test_closed_forms_against_tables():
    assert omega_closed_1_minus2(0, 0, 9) == 1
    assert omega_closed_1_minus2(0, 3, 7) == 120
    assert omega_closed_1_2(0, 1, 6) == -10
    assert omega_closed_1_2(1, 1, 6) == -6
    assert omega_closed_0_minus1(2, 2, 9) == 30
    for n in range(1, 25):
        tables = {
            omega_closed_1_minus2: omega_table((1, -2), n),
            omega_closed_1_2: omega_table((1, 2), n),
            omega_closed_0_minus1: omega_table((0, -1), n),
        }
        for closed, table in tables.items():
            for r, k, v in table.entries():
                assert closed(r, k, n) == v
        m = n // 2
        assert omega_closed_0_minus1(0, m, n) == falling_product(n)


def test_closed_forms_reject_outside_triangle():
    with pytest.raises(IndexError):
        omega_closed_1_2(2, 2, 6)
    with pytest.raises(IndexError):
        omega_table((1, 1), 6)[4, 0]


def test_point_validation():
    with pytest.raises(ValueError):
        OmegaPoint(0, 0)
    with pytest.raises(ValueError):
        omega_top((1, 1), 0)


def test_caps_are_enforced():
    with pytest.raises(CapExceeded):
        omega_top((1, 1), 40, caps=Caps(omega_half=10))
    assert omega_top((1, 1), 20, caps=Caps(omega_half=10))


def test_kernel_membership():
    golden = QuadElem(Fraction(-1, 2), Fraction(1, 2), 5)  # phi - 1
    cases = [
        ((1, 0), 8, 2),
        ((1, -1), 12, 3),
        ((1, sqrt(2)), 16, 4),
        ((1, golden), 20, 5),
        ((1, sqrt(3)), 24, 6),
    ]
    for point, modulus, residue in cases:
        for n in range(1, 4 * modulus):
            if n % modulus in (residue, modulus - residue):
                assert in_kernel(point, n), (point, n)
    assert all(in_omega_space((1, 0), n) for n in range(1, 60) if n % 8 in (1, 7))


def test_tables_are_immutable():
    table = omega_table((1, 1), 6)
    with pytest.raises(TypeError):
        table.columns[0][0] = 5


@settings(max_examples=60, deadline=None)
@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 40))
def test_matches_cell_by_cell_definition(zeta, xi, n):
    if (zeta, xi) == (0, 0):
        return
    table = omega_table((zeta, xi), n)
    assert dict(((r, k), v) for r, k, v in table.entries()) == omega_by_definition(zeta, xi, n)


@settings(max_examples=80, deadline=None)
@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(1, 80))
def test_apex_over_falling_product_is_psi(zeta, xi, n):
    if (zeta, xi) == (0, 0):
        return
    top = omega_top((zeta, xi), n)
    assert top % falling(n) == 0
    assert top // falling(n) == psi_by_squares(zeta, xi, n)

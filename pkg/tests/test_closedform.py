from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ffspec.closedform import (
    DyadicRational,
    N4_closed,
    moment_check,
    n3_closed,
    n4_closed,
    predicted_spectrum,
    tau,
    tau_binomial,
    tau_bound_check,
    tau_scaled,
)
from ffspec.powerfn import Spectrum

TAU_VALUES = ["1/2", "-7/4", "-11/8", "17/16", "61/32", "-7/64", "-251/128", "-223/256",
           "781/512", "1673/1024"]


def tau_fraction(m):
    """The rational recurrence as stated, in Fractions."""
    a, b = Fraction(1, 2), Fraction(-7, 4)
    if m == 1:
        return a
    for _ in range(m - 2):
        a, b = b, b / 2 - a
    return b


def test_dyadic_canonical():
    assert DyadicRational(-14, 3) == DyadicRational(-7, 2)
    assert str(DyadicRational(-14, 3)) == "-7/4"
    assert DyadicRational(0, 5) == DyadicRational(0, 0)
    assert str(DyadicRational(8, 2)) == "2"
    assert DyadicRational(3, 2).as_fraction() == Fraction(3, 4)
    with pytest.raises(ValueError):
        DyadicRational(1, -1)


def test_tau_scaled_table():
    assert tau_scaled(4) == 17
    assert tau_scaled(7) == -251
    assert tau_scaled(10) == 1673
    assert [str(tau(m)) for m in range(1, 11)] == TAU_VALUES
    with pytest.raises(ValueError):
        tau_scaled(0)


def test_tau_binomial_table():
    assert tau_binomial(1) == DyadicRational(1, 1)
    assert tau_binomial(2) == DyadicRational(-7, 2)
    assert [str(tau_binomial(m)) for m in range(1, 11)] == TAU_VALUES


@pytest.mark.parametrize("m", range(1, 65))
def test_recurrence_equals_binomial_sum(m):
    assert tau_binomial(m) == DyadicRational(tau_scaled(m), m)
    assert tau_binomial(m).as_fraction() == tau_fraction(m)


def test_predicted_examples():
    p4 = predicted_spectrum(4)
    assert (p4.omega_0, p4.omega_2, p4.omega_4, p4.omega_q) == (165, 60, 30, 1)
    p6 = predicted_spectrum(6)
    assert (p6.omega_0, p6.omega_2, p6.omega_4, p6.omega_q) == (2592, 990, 513, 1)
    p8 = predicted_spectrum(8)
    assert p8.entries() == {0: 41115, 2: 16200, 4: 8220, 256: 1}
    assert predicted_spectrum(2).entries() == {0: 12, 4: 4}


@pytest.mark.parametrize("m", [0, 1, 3, 7])
def test_predicted_rejects_odd(m):
    with pytest.raises(ValueError):
        predicted_spectrum(m)


@pytest.mark.parametrize("m", range(4, 41, 2))
def test_predicted_linear_system(m):
    q = 1 << m
    s = tau_scaled(m)
    p = predicted_spectrum(m)  # raises on inexact division
    assert min(p.omega_0, p.omega_2, p.omega_4) > 0
    assert p.omega_0 + p.omega_2 + p.omega_4 + 1 == q * q
    assert 2 * p.omega_2 + 4 * p.omega_4 + q == q * q
    assert 4 * p.omega_2 + 16 * p.omega_4 + q * q == 4 * q * q - s - 2 * q + 1
    # the same counts straight from the rational statement
    t = tau_fraction(m)
    assert Fraction(5 * q * q + (4 - t) * q - 7, 8) == p.omega_0
    assert Fraction(q * q + (t - 2) * q - 1, 4) == p.omega_2
    assert Fraction(q * q - t * q + 1, 8) == p.omega_4


def test_counting_examples():
    assert n3_closed(2) == 30
    assert n3_closed(1) == 6
    assert n4_closed(2) == 1005
    assert n4_closed(1) == 21
    assert N4_closed(2) == 1216
    assert (1216 - 256) // 15 == 64
    assert (N4_closed(4) - 256 ** 2) == 255 * (4 * 60 + 16 * 30 + 256)


@pytest.mark.parametrize("m", range(1, 41))
def test_N4_decomposition(m):
    q = 1 << m
    assert N4_closed(m) == 1 + 6 * (q * q - 1) + 4 * n3_closed(m) + n4_closed(m)


@pytest.mark.parametrize("m", range(1, 13))
def test_closed_forms_match_rational_statement(m):
    q = 1 << m
    t = tau_fraction(m)
    if m % 2 == 0:
        assert n4_closed(m) == (5 * q * q - (t + 6) * q + 4) * (q * q - 1)
        assert N4_closed(m) == 1 + (5 * q * q - (t + 2) * q + 2) * (q * q - 1)
    else:
        assert n4_closed(m) == (5 * q * q - (t + 6) * q) * (q * q - 1)
        assert N4_closed(m) == 1 + (5 * q * q - (t + 2) * q + 6) * (q * q - 1)


def test_moment_check():
    ex1 = Spectrum({0: 165, 2: 60, 4: 30, 16: 1}, 256)
    assert moment_check(ex1, N4_closed(4))
    assert not moment_check(Spectrum({0: 166, 2: 60, 4: 30, 16: 1}, 256), N4_closed(4))
    assert not moment_check(ex1, N4_closed(4) + 1)
    assert moment_check(Spectrum({0: 12, 4: 4}, 16), 1216)


def test_tau_bound():
    assert tau_bound_check(1)
    assert tau_bound_check(10)
    assert max(abs(tau_scaled(m)) for m in range(1, 11)) == 1673 <= 2 ** 11
    assert tau_bound_check(30)
    assert tau_bound_check(60)
    with pytest.raises(ValueError):
        tau_bound_check(0)


@given(st.integers(1, 60))
def test_sharp_bound(m):
    assert abs(tau_scaled(m)) <= 2 ** (m + 1)

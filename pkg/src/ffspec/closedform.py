"""Exact closed forms for the power map x^(3q-2) over GF(q^2), q = 2^m.

Everything runs on Python integers.  The rational sequence tau_m is carried
as s_m = 2^m * tau_m, which satisfies s_1 = 1, s_2 = -7 and
s_m = s_{m-1} - 4 s_{m-2}; because q = 2^m, the product tau_m * q that
appears in every formula is exactly s_m.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class DyadicRational:
    """The value numerator / 2^log2_denominator, kept in lowest terms."""

    numerator: int
    log2_denominator: int = 0

    def __post_init__(self):
        if self.log2_denominator < 0:
            raise ValueError("log2_denominator must be non-negative")
        num, k = self.numerator, self.log2_denominator
        if num == 0:
            k = 0
        while k and num % 2 == 0:
            num //= 2
            k -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "log2_denominator", k)

    @property
    def denominator(self):
        return 1 << self.log2_denominator

    def __str__(self):
        if self.log2_denominator == 0:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def as_fraction(self):
        from fractions import Fraction
        return Fraction(self.numerator, self.denominator)


@dataclass(frozen=True)
class PredictedSpectrum:
    m: int
    q: int
    omega_0: int
    omega_2: int
    omega_4: int
    omega_q: int

    def entries(self):
        """Sparse {i: w_i} view with zero counts dropped (m = 2 merges w_q into w_4)."""
        out = {}
        for i, w in ((0, self.omega_0), (2, self.omega_2), (4, self.omega_4), (self.q, self.omega_q)):
            if w:
                out[i] = out.get(i, 0) + w
        return out


@functools.lru_cache(maxsize=None)
def tau_scaled(m):
    """Integer s_m with tau_m = s_m / 2^m."""
    if m < 1:
        raise ValueError("tau is defined for m >= 1")
    prev, cur = 1, -7
    if m == 1:
        return prev
    for _ in range(m - 2):
        prev, cur = cur, cur - 4 * prev
    return cur


def tau(m):
    return DyadicRational(tau_scaled(m), m)


def tau_binomial(m):
    """tau_m from the binomial sum 2^(1-2m) * sum_i C(m, 2i) (-15)^i."""
    if m < 1:
        raise ValueError("tau is defined for m >= 1")
    total = sum(comb(m, 2 * i) * (-15) ** i for i in range(m // 2 + 1))
    return DyadicRational(total, 2 * m - 1)


def _exact_div(num, den, what):
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} not divisible by {den}")
    return q


def predicted_spectrum(m):
    if m < 2 or m % 2:
        raise ValueError(f"predicted spectrum needs even m >= 2, got {m}")
    q = 1 << m
    if m == 2:
        # q = 4 coincides with the bound 4, so delta(1,1) joins w_4
        return PredictedSpectrum(m, q, omega_0=12, omega_2=0, omega_4=4, omega_q=0)
    s = tau_scaled(m)
    return PredictedSpectrum(
        m, q,
        omega_0=_exact_div(5 * q * q + 4 * q - s - 7, 8, "omega_0"),
        omega_2=_exact_div(q * q - 2 * q + s - 1, 4, "omega_2"),
        omega_4=_exact_div(q * q - s + 1, 8, "omega_4"),
        omega_q=1,
    )


def n3_closed(m):
    q = 1 << m
    if m % 2 == 0:
        return (q - 2) * (q * q - 1)
    return q * (q * q - 1)


def n4_closed(m):
    q = 1 << m
    s = tau_scaled(m)
    extra = 4 if m % 2 == 0 else 0
    return (5 * q * q - s - 6 * q + extra) * (q * q - 1)


def N4_closed(m):
    q = 1 << m
    s = tau_scaled(m)
    extra = 2 if m % 2 == 0 else 6
    return 1 + (5 * q * q - s - 2 * q + extra) * (q * q - 1)


def moment_check(spec, N4):
    """Both counting identities plus (Q - 1) * sum(i^2 w_i) = N4 - Q^2."""
    Q = spec.field_size
    entries = spec.entries
    return (sum(entries.values()) == Q
            and sum(i * w for i, w in entries.items()) == Q
            and (Q - 1) * sum(i * i * w for i, w in entries.items()) == N4 - Q * Q)


def tau_bound_check(m_max):
    """|s_m| < 4^m (i.e. |tau_m| < 2^m) for every m <= m_max.

    Also asserts the sharper |s_m| <= 2^(m+1): both roots of the
    characteristic polynomial of the scaled recurrence have modulus 2.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    ok = True
    for m in range(1, m_max + 1):
        s = tau_scaled(m)
        assert abs(s) <= 1 << (m + 1), f"|s_{m}| = {abs(s)} exceeds 2^{m + 1}"
        ok = ok and abs(s) < 4 ** m
    return ok

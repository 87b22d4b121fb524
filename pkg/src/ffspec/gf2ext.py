"""Arithmetic in binary extension fields GF(2^n), 1 <= n <= 24.

Elements are polynomial-basis bit masks.  Every field carries full
exponential/logarithm tables with respect to a fixed primitive element, so
multiplication, inversion and arbitrary (also negative) powers are table
lookups.  The multiplication used to *build* those tables is plain
shift-and-reduce carryless multiplication.
"""

from __future__ import annotations

import builtins
import functools
from dataclasses import dataclass, field

import numpy as np

from . import kernels

MAX_DEGREE = 24


class ReducibleModulusError(ValueError):
    pass


class FieldMismatchError(ValueError):
    pass


# --- GF(2)[x] helpers on integer masks ---------------------------------------

def _degree(p):
    return p.bit_length() - 1


def _polymod(a, m):
    dm = _degree(m)
    while a and _degree(a) >= dm:
        a ^= m << (_degree(a) - dm)
    return a


def _polygcd(a, b):
    while b:
        a, b = b, _polymod(a, b)
    return a


def _mulmod(a, b, modulus, n):
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a >> n:
            a ^= modulus
    return acc


def is_irreducible(mask):
    """Ben-Or test: f of degree n is irreducible over GF(2) iff
    gcd(x^(2^i) - x, f) = 1 for every 1 <= i <= n // 2."""
    n = _degree(mask)
    if n < 1:
        return False
    if n == 1:
        return True
    x = 0b10
    h = x
    for _ in range(n // 2):
        h = _mulmod(h, h, mask, n)
        if _polygcd(mask, h ^ x) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(n):
    """Smallest irreducible degree-``n`` mask with nonzero constant term."""
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 1..{MAX_DEGREE}")
    for mask in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(mask):
            return mask
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def _prime_factors(k):
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


def _powmod(a, e, modulus, n):
    acc = 1
    while e:
        if e & 1:
            acc = _mulmod(acc, a, modulus, n)
        a = _mulmod(a, a, modulus, n)
        e >>= 1
    return acc


def format_modulus(mask):
    """Hex serialisation with the leading degree bit included, e.g. ``0x7``."""
    return f"{mask:#x}"


# --- field construction -----------------------------------------------------

@dataclass(frozen=True, eq=False, repr=False)
class FieldSpec:
    n: int
    modulus: int
    generator: int
    exp_table: np.ndarray = field(compare=False)
    log_table: np.ndarray = field(compare=False)

    @property
    def order(self):
        """Number of field elements, 2^n."""
        return 1 << self.n

    @property
    def unit_order(self):
        return (1 << self.n) - 1

    def __repr__(self):
        return f"FieldSpec(n={self.n}, modulus={format_modulus(self.modulus)})"

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.n == other.n and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __call__(self, bits):
        return FieldElement(self, bits)

    def elements(self):
        return [FieldElement(self, b) for b in range(self.order)]

    # Integer-level arithmetic.  These are the primitives every other module
    # builds on; the FieldElement wrappers below only add type checks.

    def mul_int(self, a, b):
        if a == 0 or b == 0:
            return 0
        k = (int(self.log_table[a]) + int(self.log_table[b])) % self.unit_order
        return int(self.exp_table[k])

    def pow_int(self, a, e):
        if a == 0:
            return 1 if e == 0 else 0
        k = (int(self.log_table[a]) * (e % self.unit_order)) % self.unit_order
        return int(self.exp_table[k])

    def inv_int(self, a):
        return self.pow_int(a, -1)

    def power_array(self, xs, e):
        """Vectorised ``x^e`` over a uint32 array (0^e = 0 for e != 0)."""
        xs = np.asarray(xs, dtype=np.uint32)
        order = np.uint64(self.unit_order)
        k = (self.log_table[xs].astype(np.uint64) * np.uint64(e % self.unit_order)) % order
        out = self.exp_table[k]
        return np.where(xs == 0, np.uint32(1 if e == 0 else 0), out).astype(np.uint32)

    def mul_array(self, xs, ys):
        xs = np.asarray(xs, dtype=np.uint32)
        ys = np.asarray(ys, dtype=np.uint32)
        k = (self.log_table[xs].astype(np.uint64) + self.log_table[ys]) % np.uint64(self.unit_order)
        out = self.exp_table[k]
        return np.where((xs == 0) | (ys == 0), np.uint32(0), out).astype(np.uint32)


@functools.lru_cache(maxsize=8)
def make_field(n, modulus=None):
    """Build GF(2^n) with the given (or default) irreducible modulus.

    The generator is the smallest element of multiplicative order 2^n - 1.
    """
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 1..{MAX_DEGREE}")
    if modulus is None:
        modulus = default_modulus(n)
    if _degree(modulus) != n:
        raise ValueError(f"modulus {format_modulus(modulus)} does not have degree {n}")
    if not is_irreducible(modulus):
        raise ReducibleModulusError(f"modulus {format_modulus(modulus)} is reducible over GF(2)")

    unit_order = (1 << n) - 1
    cofactors = [unit_order // p for p in _prime_factors(unit_order)]
    generator = next(
        g for g in range(1, 1 << n)
        if _powmod(g, unit_order, modulus, n) == 1
        and all(_powmod(g, c, modulus, n) != 1 for c in cofactors)
    )
    exp_table = kernels.build_exp_table(n, modulus, generator)
    log_table = np.zeros(1 << n, dtype=np.uint32)
    log_table[exp_table] = np.arange(unit_order, dtype=np.uint32)
    exp_table.setflags(write=False)
    log_table.setflags(write=False)
    return FieldSpec(n, modulus, generator, exp_table, log_table)


# --- elements ----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class FieldElement:
    field: FieldSpec
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.field.order:
            raise ValueError(f"{self.bits:#x} is not an element of GF(2^{self.field.n})")

    def __repr__(self):
        return f"GF(2^{self.field.n})({self.bits:#x})"

    def __int__(self):
        return self.bits

    def __bool__(self):
        return self.bits != 0

    def __add__(self, other):
        return add(self, other)

    __sub__ = __add__

    def __mul__(self, other):
        return mul(self, other)

    def __truediv__(self, other):
        return mul(self, inv(other))

    def __pow__(self, e):
        return power(self, e)

    def __neg__(self):
        return self


def _check(a, b):
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")


def add(a, b):
    _check(a, b)
    return FieldElement(a.field, a.bits ^ b.bits)


def mul(a, b):
    _check(a, b)
    return FieldElement(a.field, a.field.mul_int(a.bits, b.bits))


def inv(a):
    """Multiplicative inverse, with the convention inv(0) = 0."""
    return FieldElement(a.field, a.field.inv_int(a.bits))


def power(a, e):
    """``a**e`` for any signed ``e``; 0**e = 0 for e != 0 and 0**0 = 1."""
    return FieldElement(a.field, a.field.pow_int(a.bits, e))


def frobenius(a, k):
    """``a^(2^k)``."""
    if not 0 <= k < a.field.n:
        raise ValueError(f"frobenius index {k} outside 0..{a.field.n - 1}")
    return power(a, builtins.pow(2, k))


def sqrt(a):
    return power(a, builtins.pow(2, a.field.n - 1))


def subgroup_u(fs):
    """The order-(q+1) subgroup {x : x^(q+1) = 1} of GF(q^2)^*, q = 2^(n/2)."""
    if fs.n % 2:
        raise ValueError(f"subgroup_u needs an even degree, got n={fs.n}")
    q = 1 << (fs.n // 2)
    return [FieldElement(fs, int(fs.exp_table[k * (q - 1)])) for k in range(q + 1)]


def in_subfield(a, m):
    """True iff ``a`` lies in the subfield GF(2^m)."""
    if m < 1 or a.field.n % m:
        raise ValueError(f"{m} does not divide {a.field.n}")
    return a.field.pow_int(a.bits, 1 << m) == a.bits


def parse_element(fs, text):
    """Parse a hex (or decimal) polynomial-basis mask into an element of ``fs``."""
    value = int(text, 0)
    return FieldElement(fs, value)

"""Test-local reference arithmetic, independent of ffspec internals."""

import numpy as np


def clmul_mod(a, b, modulus, n):
    """Schoolbook carryless product reduced at the end (test-local oracle)."""
    prod = 0
    for i in range(n):
        if (b >> i) & 1:
            prod ^= a << i
    for deg in range(2 * n - 2, n - 1, -1):
        if (prod >> deg) & 1:
            prod ^= modulus << (deg - n)
    return prod


def clmul_mod_array(a, b, modulus, n):
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    prod = np.zeros_like(a)
    for i in range(n):
        prod ^= np.where((b >> np.uint64(i)) & np.uint64(1), a << np.uint64(i), np.uint64(0))
    for deg in range(2 * n - 2, n - 1, -1):
        prod ^= np.where((prod >> np.uint64(deg)) & np.uint64(1),
                         np.uint64(modulus) << np.uint64(deg - n), np.uint64(0))
    return prod.astype(np.uint32)


def poly_mod(a, b):
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def irreducible_by_trial_division(f):
    """No factor of degree 1..deg(f)//2 divides f."""
    n = f.bit_length() - 1
    for g in range(2, 1 << (n // 2 + 1)):
        if poly_mod(f, g) == 0:
            return False
    return True


def powmod_ref(a, e, modulus, n):
    acc = 1
    base = a
    while e:
        if e & 1:
            acc = clmul_mod(acc, base, modulus, n)
        base = clmul_mod(base, base, modulus, n)
        e >>= 1
    return acc

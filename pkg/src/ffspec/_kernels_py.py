"""Pure numpy implementations of the hot loops (fallback for ``_kernels``)."""

import numpy as np


def _mulconst(values, c, modulus, n):
    """Vectorised carryless multiply of every entry by the constant ``c``."""
    acc = np.zeros_like(values)
    a = values.copy()
    top = np.uint32(1 << n)
    mod = np.uint32(modulus)
    while c:
        if c & 1:
            acc ^= a
        c >>= 1
        a <<= np.uint32(1)
        a ^= np.where(a & top, mod, np.uint32(0))
    return acc


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


def build_exp_table(n, modulus, generator):
    order = (1 << n) - 1
    out = np.empty(order, dtype=np.uint32)
    # seed sequentially, then double: exp[L:2L] = exp[0:L] * g^L
    seed = min(order, 64)
    x = 1
    for k in range(seed):
        out[k] = x
        x = _mulmod(x, generator, modulus, n)
    filled = seed
    while filled < order:
        step = min(filled, order - filled)
        out[filled:filled + step] = _mulconst(out[:step], x, modulus, n)
        x = _mulmod(x, x, modulus, n)
        filled += step
    return out


def power_map(exp, log, d):
    order = exp.shape[0]
    idx = (log.astype(np.uint64) * np.uint64(d % order)) % np.uint64(order)
    out = exp[idx]
    out[0] = 0 if d != 0 else 1
    return out


def ddt_row_counts(table, a, lo, hi, out):
    x = np.arange(lo, hi, dtype=np.uint32)
    b = table[x ^ np.uint32(a)] ^ table[x]
    out += np.bincount(b, minlength=out.shape[0])[: out.shape[0]]


def value_counts(values, lo, hi, out):
    out += np.bincount(values[lo:hi], minlength=out.shape[0])[: out.shape[0]]

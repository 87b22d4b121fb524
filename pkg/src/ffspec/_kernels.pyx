# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: antilog table construction, power maps, DDT-row and
value histograms.  Mirrors ``_kernels_py`` exactly."""

import numpy as np

from libc.stdint cimport int64_t, uint32_t, uint64_t


cdef inline uint32_t _mulmod(uint32_t a, uint32_t b, uint32_t modulus,
                             int n) noexcept nogil:
    cdef uint32_t acc = 0
    cdef uint32_t top = <uint32_t>1 << n
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return acc


def build_exp_table(int n, uint32_t modulus, uint32_t generator):
    cdef Py_ssize_t order = (<Py_ssize_t>1 << n) - 1
    out = np.empty(order, dtype=np.uint32)
    cdef uint32_t[::1] e = out
    cdef uint32_t x = 1
    cdef Py_ssize_t k
    with nogil:
        for k in range(order):
            e[k] = x
            x = _mulmod(x, generator, modulus, n)
    return out


def power_map(const uint32_t[::1] exp, const uint32_t[::1] log, uint64_t d):
    cdef Py_ssize_t size = log.shape[0]
    cdef uint64_t order = <uint64_t>exp.shape[0]
    out = np.empty(size, dtype=np.uint32)
    cdef uint32_t[::1] t = out
    cdef uint64_t dr = d % order
    cdef Py_ssize_t x
    with nogil:
        t[0] = 0 if d != 0 else 1
        for x in range(1, size):
            t[x] = exp[(<uint64_t>log[x] * dr) % order]
    return out


def ddt_row_counts(const uint32_t[::1] table, uint32_t a, Py_ssize_t lo,
                   Py_ssize_t hi, int64_t[::1] out):
    cdef Py_ssize_t x
    with nogil:
        for x in range(lo, hi):
            out[table[x ^ a] ^ table[x]] += 1


def value_counts(const uint32_t[::1] values, Py_ssize_t lo, Py_ssize_t hi,
                 int64_t[::1] out):
    cdef Py_ssize_t x
    with nogil:
        for x in range(lo, hi):
            out[values[x]] += 1

"""Differential analysis of power maps x -> x^d over GF(2^n).

For a power map every DDT entry reduces to the row a = 1, since
delta(a, b) = delta(1, b / a^d).  The row is built from the full value
table T[x] = x^d in a single pass over x, split into contiguous chunks that
each fill a private histogram; the chunk histograms are summed at the end,
so the result does not depend on the number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .gf2ext import FieldElement, FieldSpec


class SpectrumIdentityError(RuntimeError):
    """A computed spectrum violated sum(w_i) = Q or sum(i*w_i) = Q."""


def default_threads():
    try:
        return max(1, int(os.environ.get("FFSPEC_THREADS", "1")))
    except ValueError:
        return 1


def reduce_exponent(d_raw, n):
    """Reduce ``d_raw`` modulo 2^n - 1, keeping nonzero multiples at 2^n - 1."""
    order = (1 << n) - 1
    r = d_raw % order
    if r == 0 and d_raw != 0:
        return order
    return r


@dataclass
class PowerFunction:
    field: FieldSpec
    d_raw: int
    d: int = field(init=False)

    def __post_init__(self):
        self.d = reduce_exponent(self.d_raw, self.field.n)

    def __call__(self, x):
        if isinstance(x, FieldElement):
            return FieldElement(self.field, self.field.pow_int(x.bits, self.d))
        return self.field.pow_int(x, self.d)

    @cached_property
    def table(self):
        t = kernels.power_map(self.field.exp_table, self.field.log_table, self.d)
        t.setflags(write=False)
        return t


@dataclass(frozen=True)
class Spectrum:
    """Sparse multiset {i: w_i}, only w_i > 0 stored."""

    entries: dict
    field_size: int

    @property
    def uniformity(self):
        return max(self.entries)

    def get(self, i):
        return self.entries.get(i, 0)

    def identities_hold(self):
        Q = self.field_size
        return (sum(self.entries.values()) == Q
                and sum(i * w for i, w in self.entries.items()) == Q)

    def second_moment(self):
        return sum(i * i * w for i, w in self.entries.items())

    def as_list(self):
        return [{"delta": i, "count": w} for i, w in sorted(self.entries.items())]

    def __str__(self):
        inner = ", ".join(f"w_{i}={w}" for i, w in sorted(self.entries.items()))
        return f"[{inner}]"


def _chunks(size, workers):
    step = -(-size // workers)
    return [(lo, min(lo + step, size)) for lo in range(0, size, step)]


def _row_with_offset(F, a, threads):
    table = F.table
    size = F.field.order
    threads = threads or default_threads()
    bounds = _chunks(size, max(1, threads))

    def work(span):
        out = np.zeros(size, dtype=np.int64)
        kernels.ddt_row_counts(table, a, span[0], span[1], out)
        return out

    if len(bounds) == 1:
        return work(bounds[0])
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(work, bounds))
    row = parts[0]
    for p in parts[1:]:
        row += p
    return row


def ddt_row(F, threads=None):
    """Array ``row`` with ``row[b] = delta(1, b)`` for every b in GF(2^n)."""
    return _row_with_offset(F, 1, threads)


def delta_entry(F, a, b):
    """|{x : F(x + a) + F(x) = b}| by direct enumeration, a != 0.

    Deliberately independent of :func:`ddt_row`: evaluates each power
    through the field rather than through the precomputed value table.
    """
    a = int(a)
    b = int(b)
    if a == 0:
        raise ValueError("delta_entry requires a != 0")
    fs = F.field
    xs = np.arange(fs.order, dtype=np.uint32)
    lhs = fs.power_array(xs ^ np.uint32(a), F.d) ^ fs.power_array(xs, F.d)
    return int(np.count_nonzero(lhs == b))


def spectrum_of_row(row, field_size):
    values, counts = np.unique(row, return_counts=True)
    s = Spectrum({int(v): int(c) for v, c in zip(values, counts)}, field_size)
    if not s.identities_hold():
        raise SpectrumIdentityError(f"moment identities fail for {s}")
    return s


def spectrum(F, threads=None):
    return spectrum_of_row(ddt_row(F, threads), F.field.order)


def differential_uniformity(F, threads=None):
    return int(ddt_row(F, threads).max())


def local_uniformity(F, threads=None):
    """max delta(1, b) over b outside GF(2)."""
    row = ddt_row(F, threads)
    if row.shape[0] <= 2:
        return 0
    return int(row[2:].max())


def locality_class(local):
    if local <= 2:
        return "locally-APN"
    if local <= 4:
        return "locally-4-uniform"
    return "none"


def is_niho(d, m):
    """Return ``(True, j)`` if d = 2^j (mod 2^m - 1) for the least such j,
    else ``(False, None)``."""
    if m < 1:
        raise ValueError("m must be positive")
    mod = (1 << m) - 1
    if mod == 1:
        return True, 0
    r = d % mod
    for j in range(m):
        if (1 << j) % mod == r:
            return True, j
    return False, None

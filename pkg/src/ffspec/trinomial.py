"""The trinomial f(x) = x^2 + x^(1-q) + x^(2-q) over GF(q^2), unit-circle
decomposition and the four-sum check on U_{q+1}.

Negative exponents follow the convention 0^-1 = 0: the two Niho terms are
evaluated as (1/x)^(q-1) and x^2 (1/x)^q, so f(0) = 0 for every m (including
m = 1, where 2 - q = 0).
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import kernels
from .gf2ext import FieldElement, make_field, subgroup_u

OUTSIDE_HYPOTHESIS = "outside theorem hypothesis (m must be even)"


@dataclass(frozen=True)
class PreimageHistogram:
    m: int
    sizes: dict  # preimage size k -> number of c with |f^-1(c)| = k
    special: dict  # c -> |f^-1(c)| for every c whose preimage has > 2 elements
    max_other: int  # largest |f^-1(c)| over c outside GF(2)

    def mass(self):
        return sum(k * v for k, v in self.sizes.items())


def _field_for(m):
    if m < 1:
        raise ValueError("m must be >= 1")
    return make_field(2 * m)


def _half_degree(fs):
    if fs.n % 2:
        raise ValueError(f"trinomial needs an even-degree field, got n={fs.n}")
    return fs.n // 2


def eval_trinomial(x, m=None):
    fs = x.field
    half = _half_degree(fs)
    if m is not None and m != half:
        raise ValueError(f"element lives in GF(2^{fs.n}), not GF(2^{2 * m})")
    q = 1 << half
    b = x.bits
    r = fs.inv_int(b)
    sq = fs.pow_int(b, 2)
    return FieldElement(fs, sq ^ fs.pow_int(r, q - 1) ^ fs.mul_int(sq, fs.pow_int(r, q)))


def trinomial_values(m):
    """f(x) for every x in GF(q^2), indexed by x."""
    fs = _field_for(m)
    q = 1 << m
    xs = np.arange(fs.order, dtype=np.uint32)
    r = fs.power_array(xs, -1)
    sq = fs.power_array(xs, 2)
    return sq ^ fs.power_array(r, q - 1) ^ fs.mul_array(sq, fs.power_array(r, q))


def preimage_count(c, m):
    c = int(c)
    values = trinomial_values(m)
    return int(np.count_nonzero(values == c))


def preimage_histogram(m):
    values = trinomial_values(m)
    counts = np.zeros(values.shape[0], dtype=np.int64)
    kernels.value_counts(values, 0, values.shape[0], counts)
    sizes = Counter(counts.tolist())
    special = {int(c): int(counts[c]) for c in np.flatnonzero(counts > 2)}
    max_other = int(counts[2:].max()) if counts.shape[0] > 2 else 0
    return PreimageHistogram(m, dict(sorted(sizes.items())), special, max_other)


def decompose_unit(x, m=None):
    """Split x != 0 as y * z with y in GF(q)^* and z in U_{q+1}.

    y is the square root of the norm x^(q+1), z = x / y.
    """
    fs = x.field
    half = _half_degree(fs)
    if m is not None and m != half:
        raise ValueError(f"element lives in GF(2^{fs.n}), not GF(2^{2 * m})")
    if x.bits == 0:
        raise ValueError("decompose_unit requires x != 0")
    q = 1 << half
    norm = fs.pow_int(x.bits, q + 1)
    y = fs.pow_int(norm, 1 << (fs.n - 1))
    z = fs.mul_int(x.bits, fs.inv_int(y))
    return FieldElement(fs, y), FieldElement(fs, z)


EXHAUSTIVE_MAX_M = 6


def four_sum_nonzero(m, samples=200_000, seed=0):
    """True iff no four distinct elements of U_{q+1} sum to zero.

    Exhaustive over all 4-subsets for m <= 6, random 4-subsets above that.
    """
    fs = _field_for(m)
    units = [u.bits for u in subgroup_u(fs)]
    if m <= EXHAUSTIVE_MAX_M:
        for a, b, c, d in itertools.combinations(units, 4):
            if a ^ b ^ c ^ d == 0:
                return False
        return True
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c, d = rng.sample(units, 4)
        if a ^ b ^ c ^ d == 0:
            return False
    return True

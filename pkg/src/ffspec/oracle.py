"""Brute-force counting oracles.

These only use the field primitives in :mod:`ffspec.gf2ext`; nothing here
touches the DDT kernels or the closed forms they are meant to check.

The four-variable counts use the pair reduction: in characteristic 2,
x1 + x2 + x3 + x4 = 0 and x1^d + ... + x4^d = 0 hold iff the pairs
(x1, x2) and (x3, x4) have the same (sum, power-sum) signature, so the
number of solutions is the sum of squared signature counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2ext import make_field

DIRECT_MAX_ORDER = 1 << 8
PAIR_MAX_ORDER = 1 << 12


class OracleCapError(ValueError):
    """Field too large for the requested brute-force method."""


def _setup(m, d):
    fs = make_field(2 * m)
    if d is None:
        d = 3 * (1 << m) - 2
    return fs, d


def _cap(fs, limit, method):
    if fs.order > limit:
        raise OracleCapError(f"{method} method capped at Q <= {limit}, got Q = {fs.order}")


@dataclass(frozen=True)
class PairHistogram:
    """counts[s, t] = #{(x1, x2) : x1 + x2 = s, x1^d + x2^d = t}."""

    field_size: int
    d: int
    nonzero: bool
    counts: np.ndarray

    def __getitem__(self, key):
        return int(self.counts[key])

    def total(self):
        return int(self.counts.sum())


def _powers(fs, d):
    return fs.power_array(np.arange(fs.order, dtype=np.uint32), d)


def pair_histogram(m, d=None, nonzero=True):
    fs, d = _setup(m, d)
    _cap(fs, DIRECT_MAX_ORDER, "dense pair-histogram")
    Q = fs.order
    xs = np.arange(1 if nonzero else 0, Q, dtype=np.uint32)
    p = _powers(fs, d)
    s = (xs[:, None] ^ xs[None, :]).ravel()
    t = (p[xs][:, None] ^ p[xs][None, :]).ravel()
    counts = np.bincount(s.astype(np.int64) * Q + t, minlength=Q * Q).reshape(Q, Q)
    return PairHistogram(Q, d, nonzero, counts)


def _pair_square_sum(fs, p, nonzero, block=256):
    """sum over (s, t) of (pair count)^2, streamed over blocks of s."""
    Q = fs.order
    xs = np.arange(Q, dtype=np.uint32)
    total = 0
    for lo in range(0, Q, block):
        ss = np.arange(lo, min(lo + block, Q), dtype=np.uint32)
        x2 = xs[None, :] ^ ss[:, None]
        t = p[xs][None, :] ^ p[x2]
        if nonzero:
            keep = (xs[None, :] != 0) & (x2 != 0)
        else:
            keep = np.ones_like(x2, dtype=bool)
        rows = np.broadcast_to(np.arange(ss.shape[0])[:, None], x2.shape)
        key = rows[keep].astype(np.int64) * Q + t[keep]
        h = np.bincount(key, minlength=ss.shape[0] * Q)
        total += int(np.dot(h, h))
    return total


def brute_nr(m, r, d=None, method="auto"):
    """Solutions in (GF(q^2)^*)^r of sum x_i = 0, sum x_i^d = 0, r in {3, 4}."""
    if r not in (3, 4):
        raise ValueError("r must be 3 or 4")
    fs, d = _setup(m, d)
    if method == "auto":
        method = "direct" if fs.order <= DIRECT_MAX_ORDER else "pair"
    p = _powers(fs, d)
    Q = fs.order

    if method == "direct":
        _cap(fs, DIRECT_MAX_ORDER, "direct")
        count = 0
        if r == 3:
            for x1 in range(1, Q):
                for x2 in range(1, Q):
                    x3 = x1 ^ x2
                    if x3 and p[x1] ^ p[x2] ^ p[x3] == 0:
                        count += 1
            return count
        x3 = np.arange(1, Q, dtype=np.uint32)
        for x1 in range(1, Q):
            for x2 in range(1, Q):
                x4 = x3 ^ np.uint32(x1 ^ x2)
                ok = (x4 != 0) & ((p[x1] ^ p[x2] ^ p[x3] ^ p[x4]) == 0)
                count += int(np.count_nonzero(ok))
        return count

    if method != "pair":
        raise ValueError(f"unknown method {method!r}")
    _cap(fs, PAIR_MAX_ORDER, "pair")
    if r == 4:
        return _pair_square_sum(fs, p, nonzero=True)
    # r = 3: pairs (x1, x2) whose signature equals (x3, x3^d) for some x3 != 0
    xs = np.arange(1, Q, dtype=np.uint32)
    count = 0
    for x1 in range(1, Q):
        x3 = xs ^ np.uint32(x1)
        ok = (x3 != 0) & ((p[x1] ^ p[xs] ^ p[x3]) == 0)
        count += int(np.count_nonzero(ok))
    return count


def brute_N4(m, d=None, method="pair"):
    """Solutions in GF(q^2)^4 (zeros allowed) of the four-variable system."""
    fs, d = _setup(m, d)
    p = _powers(fs, d)
    if method == "direct":
        _cap(fs, DIRECT_MAX_ORDER, "direct")
        Q = fs.order
        x3 = np.arange(Q, dtype=np.uint32)
        count = 0
        for x1 in range(Q):
            for x2 in range(Q):
                x4 = x3 ^ np.uint32(x1 ^ x2)
                count += int(np.count_nonzero((p[x1] ^ p[x2] ^ p[x3] ^ p[x4]) == 0))
        return count
    _cap(fs, PAIR_MAX_ORDER, "pair")
    return _pair_square_sum(fs, p, nonzero=False)


def N4_from_spectrum(spec):
    """N4 = Q^2 + (Q - 1) * sum(i^2 w_i)."""
    Q = spec.field_size
    return Q * Q + (Q - 1) * sum(i * i * w for i, w in spec.entries.items())


def brute_delta(m, d, b):
    """#{x : (x+1)^d + x^d = b} evaluating every power through the field."""
    fs = make_field(2 * m)
    b = int(b)
    count = 0
    for x in range(fs.order):
        if fs.pow_int(x ^ 1, d) ^ fs.pow_int(x, d) == b:
            count += 1
    return count

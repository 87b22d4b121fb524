"""Registry of power-function families over GF(2^n) whose differential
spectra are known, with matching of a concrete (n, d).

Matching works on the cyclotomic class {d * 2^k mod 2^n - 1}, along which
the differential spectrum is invariant.  Inverse classes are not used.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator


@dataclass(frozen=True)
class CatalogEntry:
    family_id: str
    exponent_rule: str
    condition: str
    uniformity_rule: str
    locality: str  # "none" | "locally-APN" | "locally-4-uniform"
    reference: str
    # yields (exponent, params, uniformity candidates) for every admissible
    # parameterisation at degree n
    candidates: Callable[[int], Iterator[tuple]]

    def to_dict(self):
        return {
            "family_id": self.family_id,
            "rule": self.exponent_rule,
            "condition": self.condition,
            "uniformity": self.uniformity_rule,
            "locality": self.locality,
            "reference": self.reference,
        }


def _gold(n):
    for t in range(1, n):
        s = gcd(t, n)
        yield (1 << t) + 1, {"t": t, "s": s}, (1 << s,)


def _kasami(n):
    for t in range(1, n):
        s = gcd(t, n)
        if (n // s) % 2:
            yield (1 << 2 * t) - (1 << t) + 1, {"t": t, "s": s}, (1 << s,)


def _inverse(n):
    if n >= 2:
        yield (1 << n) - 2, {}, (2, 4)


def _bracken_leander(n):
    if n % 4 == 0:
        k = n // 4
        yield (1 << 2 * k) + (1 << k) + 1, {"k": k}, (4,)


def _mersenne_3_or_n_minus_2(n):
    if n < 6:  # t = 3 and t = n - 2 collapse onto Gold/linear exponents
        return
    for t in sorted({3, n - 2}):
        yield (1 << t) - 1, {"t": t}, (6, 8)


def _mersenne_half(n):
    if n % 2 == 0 and n >= 4:
        t = n // 2
        yield (1 << t) - 1, {"t": t}, ((1 << t) - 2,)


def _mersenne_half_plus_one(n):
    if n % 2 == 0 and n >= 2:
        t = n // 2 + 1
        yield (1 << t) - 1, {"t": t}, (1 << (n // 2),)


def _mersenne_odd(n):
    if n % 2 == 1 and n >= 7:
        for t in sorted({(n - 1) // 2, (n + 3) // 2}):
            yield (1 << t) - 1, {"t": t}, (6, 8)


def _xyy_a(n):
    m = n // 2
    if n % 2 == 0 and m >= 5 and m % 2 == 1:
        yield (1 << m) + (1 << (m + 1) // 2) + 1, {"m": m}, (8,)


def _xyy_b(n):
    m = n // 2
    if n % 2 == 0 and m >= 5 and m % 2 == 1:
        yield (1 << (m + 1)) + 3, {"m": m}, (8,)


def _tlwz(n):
    if n % 4 == 0:
        k = n // 4
        yield (1 << 3 * k) + (1 << 2 * k) + (1 << k) - 1, {"k": k}, (1 << 2 * k,)


def _k_times(n):
    if n % 2 == 0 and n >= 4:
        m = n // 2
        for k in range(1, (1 << m) + 1):
            if gcd(k, (1 << m) + 1) == 1:
                yield k * ((1 << m) - 1), {"m": m, "k": k}, ((1 << m) - 2,)


def _xml(n):
    # (2^m-1)/(2^k+1): x^(2^m-1) lives in U_{2^m+1}, so the division is by
    # the inverse of 2^k+1 modulo 2^m+1
    if n % 2 == 0:
        m = n // 2
        unit = (1 << m) + 1
        for k in range(1, m + 1):
            if gcd(k, m) == 1 and gcd((1 << k) + 1, unit) == 1:
                u = pow((1 << k) + 1, -1, unit)
                yield ((1 << m) - 1) * u + 1, {"m": m, "k": k}, (1 << m,)


def _li(n):
    if n % 2 == 0 and n >= 2:
        m = n // 2
        yield (1 << m) + 3, {"m": m}, (1 << m, (1 << m) + 2)


def _niho_3q_minus_2(n):
    m = n // 2
    if n % 2 == 0 and m >= 4 and m % 2 == 0:
        yield 3 * (1 << m) - 2, {"m": m}, (1 << m,)


_ENTRIES = (
    CatalogEntry("gold", "2^t+1", "gcd(t,n)=s", "2^s", "none", "BCC10", _gold),
    CatalogEntry("kasami", "2^(2t)-2^t+1", "gcd(t,n)=s, n/s odd", "2^s", "none", "BCC10", _kasami),
    CatalogEntry("inverse", "2^n-2", "n>=2", "2 or 4", "none", "BCC10", _inverse),
    CatalogEntry("bracken-leander", "2^(2k)+2^k+1", "n=4k", "4", "none", "BCC10,XY17",
                 _bracken_leander),
    CatalogEntry("mersenne-3-or-n-2", "2^t-1", "t=3, n-2", "6 or 8", "none", "BCC11",
                 _mersenne_3_or_n_minus_2),
    CatalogEntry("mersenne-half", "2^t-1", "t=n/2, n even", "2^(n/2)-2", "locally-APN", "BCC11",
                 _mersenne_half),
    CatalogEntry("mersenne-half-plus-one", "2^t-1", "t=n/2+1, n even", "2^(n/2)", "locally-APN",
                 "BCC11", _mersenne_half_plus_one),
    CatalogEntry("mersenne-odd", "2^t-1", "t=(n-1)/2, (n+3)/2, n odd", "6 or 8", "none", "BP14",
                 _mersenne_odd),
    CatalogEntry("xyy-a", "2^m+2^((m+1)/2)+1", "n=2m, m>=5 odd", "8", "none", "XYY18", _xyy_a),
    CatalogEntry("xyy-b", "2^(m+1)+3", "n=2m, m>=5 odd", "8", "none", "XYY18", _xyy_b),
    CatalogEntry("tlwztj", "2^(3k)+2^(2k)+2^k-1", "n=4k", "2^(2k)", "none", "TLWZTJ23", _tlwz),
    CatalogEntry("k-times-2m-1", "k(2^m-1)", "n=2m, gcd(k,2^m+1)=1", "2^m-2", "locally-APN",
                 "HLXZT23", _k_times),
    CatalogEntry("xml", "(2^m-1)/(2^k+1)+1", "n=2m, gcd(k,m)=1", "2^m", "locally-APN", "XML23",
                 _xml),
    CatalogEntry("2m-plus-3", "2^m+3", "n=2m",
                 "2^m (locally differentially 4-uniform) or 2^m+2", "locally-4-uniform",
                 "li2023differential", _li),
    CatalogEntry("niho-3q-2", "3*2^m-2", "n=2m, m>=4 even", "2^m", "locally-4-uniform",
                 "this work", _niho_3q_minus_2),
)


def entries():
    return list(_ENTRIES)


def cyclotomic_class(d, n):
    order = (1 << n) - 1
    return {(d << k) % order for k in range(n)}


@dataclass(frozen=True)
class Match:
    entry: CatalogEntry
    params: dict
    uniformity: tuple  # admissible values of the differential uniformity

    def to_dict(self):
        out = self.entry.to_dict()
        out["params"] = self.params
        out["uniformity_values"] = list(self.uniformity)
        return out


def match(n, d):
    """Every family/parameterisation whose exponent is cyclotomic-equivalent to d."""
    target = cyclotomic_class(d, n)
    order = (1 << n) - 1
    found = []
    for entry in _ENTRIES:
        for exponent, params, uniformity in entry.candidates(n):
            if exponent % order in target:
                found.append(Match(entry, params, uniformity))
                break
    return found


def to_json(indent=2):
    return json.dumps([e.to_dict() for e in _ENTRIES], indent=indent)

import itertools
import random

import pytest

from ffspec.gf2ext import in_subfield, make_field, subgroup_u
from ffspec.trinomial import (
    decompose_unit,
    eval_trinomial,
    four_sum_nonzero,
    preimage_count,
    preimage_histogram,
    trinomial_values,
)


def test_eval_small_values():
    for m in (1, 2, 3, 4):
        fs = make_field(2 * m)
        assert eval_trinomial(fs(0)) == fs(0)
        assert eval_trinomial(fs(1)) == fs(1)


def test_eval_on_shifted_unit_circle_m2():
    fs = make_field(4)
    for u in subgroup_u(fs):
        if u.bits != 1:
            assert eval_trinomial(u + fs(1), 2) == fs(1)


def test_eval_restricted_to_subfield():
    # on GF(q)^*, x^q = x so f(x) = x^2 + 1 + x
    for m in (2, 3, 4):
        fs = make_field(2 * m)
        for x in fs.elements()[1:]:
            if in_subfield(x, m):
                assert eval_trinomial(x) == x * x + fs(1) + x


def test_eval_rejects_odd_degree():
    with pytest.raises(ValueError):
        eval_trinomial(make_field(5)(3))


def test_vector_and_scalar_agree():
    fs = make_field(8)
    values = trinomial_values(4)
    for x in range(fs.order):
        assert values[x] == eval_trinomial(fs(x), 4).bits


def test_preimage_counts_m4():
    fs = make_field(8)
    assert preimage_count(fs(0), 4) == 3
    assert preimage_count(fs(1), 4) == 17
    for c in (2, 3, 0x53, 0xFF):
        assert preimage_count(fs(c), 4) in (0, 1, 2)


def test_histogram_m2_brute_force():
    fs = make_field(4)
    buckets = {}
    for x in fs.elements():
        buckets.setdefault(eval_trinomial(x).bits, []).append(x.bits)
    sizes = {}
    for c in range(16):
        k = len(buckets.get(c, []))
        sizes[k] = sizes.get(k, 0) + 1
    hist = preimage_histogram(2)
    assert hist.sizes == sizes == {0: 8, 1: 4, 2: 2, 3: 1, 5: 1}
    assert hist.special == {0: 3, 1: 5}


@pytest.mark.parametrize("m", [2, 4, 6])
def test_trinomial_preimage_sizes(m):
    q = 1 << m
    hist = preimage_histogram(m)
    assert hist.special == {0: 3, 1: q + 1}
    assert hist.max_other <= 2
    assert hist.mass() == q * q


def test_decompose_unit_simple_cases():
    fs = make_field(8)
    for x in fs.elements()[1:]:
        if in_subfield(x, 4):
            assert decompose_unit(x) == (x, fs(1))
    for z in subgroup_u(fs):
        assert decompose_unit(z) == (fs(1), z)
    with pytest.raises(ValueError):
        decompose_unit(fs(0))


def test_decompose_unit_exhaustive_m2_unique():
    fs = make_field(4)
    ys = [y for y in fs.elements()[1:] if in_subfield(y, 2)]
    zs = subgroup_u(fs)
    assert len(ys) * len(zs) == 15
    for x in fs.elements()[1:]:
        pairs = [(y, z) for y, z in itertools.product(ys, zs) if y * z == x]
        assert pairs == [decompose_unit(x)]


@pytest.mark.parametrize("m", [4, 6])
def test_decompose_unit_random(m):
    fs = make_field(2 * m)
    q = 1 << m
    rng = random.Random(m)
    for _ in range(10_000):
        x = fs(rng.randrange(1, fs.order))
        y, z = decompose_unit(x, m)
        assert y * z == x
        assert in_subfield(y, m) and y.bits
        assert (z ** (q + 1)).bits == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_four_sum_nonzero_exhaustive(m):
    assert four_sum_nonzero(m)


def test_four_sum_pair_sum_equivalent():
    # four distinct units sum to 0 iff two disjoint pairs share a sum;
    # here every unordered pair sum must be distinct
    for m in (2, 4, 6):
        units = [u.bits for u in subgroup_u(make_field(2 * m))]
        sums = [a ^ b for a, b in itertools.combinations(units, 2)]
        assert len(set(sums)) == len(sums)


def test_four_sum_sampling_mode():
    assert four_sum_nonzero(8, samples=20_000)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_eval_matches_signed_powers_away_from_zero(m):
    fs = make_field(2 * m)
    q = 1 << m
    for x in fs.elements()[1:]:
        assert eval_trinomial(x) == x ** 2 + x ** (1 - q) + x ** (2 - q)

import random

import pytest
from hypothesis import given, settings, strategies as st

from tftkit.instrumentation import counted_ring
from tftkit.oracle import naive_polymul
from tftkit.polymul import operation_profile, tft_polymul
from tftkit.ring import PrimeField


def test_known_product(f17):
    assert tft_polymul([1, 2, 3], [4, 5], f17) == [4, 13, 5, 15]


def test_multiply_by_constant_one(f17):
    f = [3, 1, 4, 1, 5]
    assert tft_polymul(f, [1], f17) == f


def test_rejects_empty_inputs(f17):
    with pytest.raises(ValueError):
        tft_polymul([], [1], f17)
    with pytest.raises(ValueError):
        tft_polymul([1], [], f17)


def test_inputs_survive(f17):
    f, g = [1, 2], [3, 4, 5]
    tft_polymul(f, g, f17)
    assert f == [1, 2] and g == [3, 4, 5]


def test_output_length(field):
    out = tft_polymul([0] * 7, [0] * 12, field)
    assert len(out) == 18
    assert out == [0] * 18


def test_matches_schoolbook(field, f17):
    rng = random.Random(41)
    for fld in (f17, field):
        p = fld.modulus
        cap = 8 if p == 17 else 40
        for _ in range(30):
            f = [rng.randrange(p) for _ in range(rng.randint(1, cap))]
            g = [rng.randrange(p) for _ in range(rng.randint(1, cap))]
            assert tft_polymul(f, g, fld) == naive_polymul(fld, f, g)


def test_unreduced_inputs_are_canonicalized(f17):
    assert tft_polymul([18], [19], f17) == naive_polymul(f17, [18], [19]) == [2]


def test_counted_run_reports_all_classes(field):
    ring = counted_ring(field)
    tft_polymul([1, 2, 3, 4], [5, 6, 7], field, ring)
    c = ring.counters
    assert c.add_sub > 0 and c.mul_root > 0 and c.mul_pow2 > 0
    assert c.mul_other == 6  # one pointwise product per output coefficient


def test_operation_profile_shape(field):
    lengths = [8, 16, 32]
    profile = operation_profile(field, lengths)
    assert sorted(profile) == lengths
    assert all(v > 0 for v in profile.values())
    assert profile[32] > profile[8]


@settings(max_examples=40)
@given(
    st.lists(st.integers(0, 16), min_size=1, max_size=8),
    st.lists(st.integers(0, 16), min_size=1, max_size=8),
)
def test_product_commutes(f, g):
    fld = PrimeField.from_modulus(17)
    assert tft_polymul(f, g, fld) == tft_polymul(g, f, fld)


@settings(max_examples=25)
@given(
    st.lists(st.integers(0, 16), min_size=1, max_size=6),
    st.lists(st.integers(0, 16), min_size=1, max_size=6),
    st.lists(st.integers(0, 16), min_size=1, max_size=6),
)
def test_product_associates(f, g, h):
    fld = PrimeField.from_modulus(17)
    assert tft_polymul(tft_polymul(f, g, fld), h, fld) == tft_polymul(
        f, tft_polymul(g, h, fld), fld
    )

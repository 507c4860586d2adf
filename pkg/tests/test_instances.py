import pytest
from hypothesis import given
from hypothesis import strategies as st

from fpr.core import InvalidInputError
from fpr.domains import check_narcissistic, check_single_crossing
from fpr.instances import (
    SplitMix64,
    gen_example_narcissistic_util,
    gen_example_sc_gap,
    gen_example_sp,
    gen_random_sc_narcissistic,
    gen_random_single_crossing,
)


def test_splitmix_reference_stream():
    # first outputs for seed 0 of the published algorithm
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_splitmix_below_and_shuffle():
    rng = SplitMix64(42)
    assert all(0 <= rng.below(7) < 7 for _ in range(200))
    with pytest.raises(InvalidInputError):
        rng.below(0)
    items = list(range(10))
    SplitMix64(5).shuffle(items)
    assert sorted(items) == list(range(10))
    again = list(range(10))
    SplitMix64(5).shuffle(again)
    assert items == again


def test_gap_family_smallest_instance():
    e = gen_example_sc_gap(1, 1)
    assert e.names == ("c1", "c2", "a1", "b1")
    assert e.rankings == ((0, 3, 1, 2), (0, 1, 3, 2), (0, 1, 2, 3), (0, 2, 1, 3))


def test_gap_family_shape_and_domain():
    for m, n in ((1, 1), (2, 3), (4, 2)):
        e = gen_example_sc_gap(m, n)
        assert e.m == 2 * m + 2 and e.n == 4 * n
        assert check_single_crossing(e)
    with pytest.raises(InvalidInputError):
        gen_example_sc_gap(0, 1)
    with pytest.raises(InvalidInputError):
        gen_example_sc_gap(1, 0)


def test_narcissistic_util_shape_and_domain():
    e = gen_example_narcissistic_util()
    assert (e.m, e.n) == (6, 12)
    assert check_single_crossing(e)
    assert check_narcissistic(e)


def test_sp_family_shape():
    for m in (1, 2, 3):
        e = gen_example_sp(m)
        assert e.m == 2 * m + 4 and e.n == 4
    with pytest.raises(InvalidInputError):
        gen_example_sp(0)


def test_random_generators_deterministic():
    assert gen_random_single_crossing(5, 7, 3) == gen_random_single_crossing(5, 7, 3)
    assert gen_random_sc_narcissistic(4, 9, 3) == gen_random_sc_narcissistic(4, 9, 3)


def test_random_narcissistic_needs_enough_voters():
    with pytest.raises(InvalidInputError):
        gen_random_sc_narcissistic(5, 4, 0)


@given(st.integers(1, 6), st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_random_single_crossing_property(m, n, seed):
    e = gen_random_single_crossing(m, n, seed)
    assert (e.m, e.n) == (m, n)
    assert check_single_crossing(e)


@given(st.integers(1, 6), st.integers(0, 6), st.integers(0, 2**32 - 1))
def test_random_narcissistic_property(m, extra, seed):
    e = gen_random_sc_narcissistic(m, m + extra, seed)
    assert (e.m, e.n) == (m, m + extra)
    assert check_single_crossing(e)
    assert check_narcissistic(e)

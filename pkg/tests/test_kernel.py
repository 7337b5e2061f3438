import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curlseq import (
    bounded_curling_number,
    curling_number,
    curling_transform,
    generate_named,
    madic_valuation,
)


def brute_curling(u):
    """Try every (period, count) pair explicitly."""
    L = len(u)
    best_k, best_p = 1, 1
    for p in range(1, L + 1):
        k = 0
        while (k + 1) * p <= L and list(u[L - (k + 1) * p : L - k * p]) == list(u[L - p : L]):
            k += 1
        if k > best_k:
            best_k, best_p = k, p
    return best_k, best_p


def test_examples():
    assert (curling_number([1]).k, curling_number([1]).min_period) == (1, 1)
    assert (curling_number([1, 1]).k, curling_number([1, 1]).min_period) == (2, 1)
    r = curling_number([8, 9, 10, 11, 11, 11])
    assert (r.k, r.min_period) == (3, 1)
    r = curling_number([2, 2, 2, 3])
    assert (r.k, r.min_period) == (1, 1)
    r = curling_number([2, 3, 2, 2, 2, 3, 2, 3])
    assert r.k == 2 and r.min_period <= 4


def test_empty_word_rejected():
    with pytest.raises(ValueError, match="empty word"):
        curling_number([])


def test_bounded_examples():
    assert bounded_curling_number([2], 2) == 2
    assert bounded_curling_number([2, 2, 2], 2) == 3
    assert bounded_curling_number([1, 1], 1) == 2
    with pytest.raises(ValueError):
        bounded_curling_number([1], 0)


def test_transform_examples(golden):
    tm = generate_named("thue_morse", 16).terms
    assert curling_transform(tm) == [1, 1, 1, 2, 1, 1, 2, 2, 1, 2, 1, 2, 2, 1, 2, 2]
    ko = generate_named("kolakoski", 16).terms
    assert curling_transform(ko) == [1, 1, 1, 2, 1, 2, 1, 1, 2, 2, 1, 2, 2, 2, 2, 1]
    assert curling_transform([]) == []
    assert curling_transform(golden["tm_32"]) == golden["tm_transform_32"]
    assert curling_transform(golden["kolakoski_32"]) == golden["kolakoski_transform_32"]


def test_transform_handles_large_alphabets():
    word = [10**9 + i for i in range(50)] + [7, 7, 7]
    out = curling_transform(word)
    assert out[0] == 1 and out[-1] == 2 and len(out) == len(word)


def test_madic_valuation():
    assert madic_valuation(8, 2) == 3
    assert madic_valuation(12, 2) == 2
    assert madic_valuation(9, 3) == 2
    assert madic_valuation(7, 2) == 0
    with pytest.raises(ValueError, match="undefined"):
        madic_valuation(0, 2)


words = st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=64)


@given(words)
@settings(max_examples=200)
def test_matches_brute_force(u):
    r = curling_number(u)
    bk, bp = brute_curling(u)
    assert (r.k, r.min_period) == (bk, bp)


@given(words)
@settings(max_examples=200)
def test_decomposition_witness(u):
    r = curling_number(u)
    assert 1 <= r.min_period <= len(u)
    assert r.k * r.min_period <= len(u)
    p, k = r.min_period, r.k
    blocks = [tuple(u[len(u) - (i + 1) * p : len(u) - i * p]) for i in range(k)]
    assert len(set(blocks)) == 1


@given(words)
@settings(max_examples=100)
def test_bounded_floor_one_is_plain_curling(u):
    assert bounded_curling_number(u, 1) == curling_number(u).k


@given(words)
@settings(max_examples=50)
def test_transform_agrees_with_prefix_scans(u):
    out = curling_transform(u)
    assert out[0] == 1
    for i in range(1, len(u)):
        assert out[i] == curling_number(u[:i]).k


def test_ruler_prefix_transforms_to_all_ones():
    ruler = generate_named("ruler", 64).terms
    assert curling_transform(ruler) == [1] * 64

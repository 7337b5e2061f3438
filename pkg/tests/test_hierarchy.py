import pytest

from curlseq import (
    DecompositionBudgetError,
    annotate,
    curling_number,
    curling_transform,
    decompose,
    expand_via_promotion,
    generate_fast,
    generate_reference,
    glue_lengths_via_promotion,
    verify_structure,
)
from curlseq.hierarchy import _self_check_small


def test_generate_examples(golden):
    assert generate_reference(1, 9) == [1, 1, 2, 1, 1, 2, 2, 2, 3]
    assert generate_reference(2, 12) == [2, 2, 2, 3] * 3
    assert generate_reference(3, 5) == [3, 3, 3, 3, 4]
    assert generate_reference(1, 220) == golden["a1_220"]
    assert generate_reference(2, 127) == golden["a2_127"]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_engine_matches_term_by_term_rebuild(m):
    assert _self_check_small(m, 200)


def test_annotate_first_terms():
    ann = annotate(2, 4)
    assert [t.value for t in ann] == [2, 2, 2, 3]
    assert [t.promoted for t in ann] == [True, True, False, False]
    assert [t.min_y_len for t in ann] == [0, 0, 1, 1]
    first = annotate(1, 1)[0]
    assert first.promoted and first.min_y_len == 0 and first.value == 1


def test_annotate_third_block_subscripts():
    # terms 9..13 form the third copy of the second block plus its glue
    ann = annotate(2, 13)[8:13]
    assert [t.value for t in ann] == [2, 2, 2, 3, 3]
    assert [t.promoted for t in ann] == [False] * 5
    assert [t.min_y_len for t in ann] == [4, 4, 1, 1, 4]


def test_annotate_promotion_flag_definition():
    for i, term in enumerate(annotate(2, 64)):
        if i == 0:
            assert term.promoted
        else:
            raw = curling_number(generate_reference(2, i)).k
            assert term.promoted == (raw < 2)
            if not term.promoted:
                assert term.min_y_len == curling_number(generate_reference(2, i)).min_period


def test_expand_via_promotion_examples():
    assert expand_via_promotion(1, annotate(2, 1), 10) == [1, 1, 2]
    assert expand_via_promotion(1, annotate(2, 4), 100) == [1, 1, 2, 1, 1, 2, 2, 2, 3]
    assert expand_via_promotion(2, annotate(3, 1), 10) == [2, 2, 2, 3]
    with pytest.raises(ValueError, match="level"):
        expand_via_promotion(1, annotate(3, 4), 10)


def test_generate_fast_equals_reference_small():
    for m, count in [(1, 30000), (2, 5000), (3, 2000), (4, 600), (5, 300), (6, 100)]:
        assert generate_fast(m, count) == generate_reference(m, count)


def test_decompose_examples():
    dec = decompose(1, 3, 1000)
    assert dec.blocks[1] == [1, 1, 2]
    assert dec.glues[0] == [2]
    assert dec.glues[1] == [2, 2, 3]
    assert dec.tails[0] == [2]
    dec2 = decompose(2, 4, 1000)
    assert dec2.glues == [[3], [3], [3, 3, 4]]


def test_decompose_glue_invariants():
    for m in (1, 2, 3):
        dec = decompose(m, 5, 100000)
        for n, glue in enumerate(dec.glues, start=1):
            assert glue[0] == m + 1
            assert all(v >= m + 1 for v in glue)
            assert dec.blocks[n] == dec.blocks[n - 1] * (m + 1) + glue
        for i, tail in enumerate(dec.tails):
            assert tail == [v for g in dec.glues[: i + 1] for v in g]


def test_decompose_budget_error_carries_partial():
    with pytest.raises(DecompositionBudgetError) as exc:
        decompose(1, 9, budget=50)
    assert exc.value.partial.m == 1
    assert len(exc.value.partial.blocks) >= 1


def test_glue_lengths_examples():
    assert glue_lengths_via_promotion(1, 6) == [1, 3, 1, 9, 4, 24]
    assert glue_lengths_via_promotion(2, 9) == [1, 1, 3, 1, 1, 3, 1, 1, 9]
    assert glue_lengths_via_promotion(3, 4) == [1, 1, 1, 3]


def test_glue_lengths_match_decomposition():
    for m in (1, 2):
        dec = decompose(m, 7, 100000)
        lengths = [len(g) for g in dec.glues]
        assert glue_lengths_via_promotion(m, len(lengths)) == lengths


def test_verify_structure():
    assert verify_structure(1, 7).passed
    assert verify_structure(2, 5).passed
    report = verify_structure(1, 2)
    assert report.passed
    dec = decompose(1, 2, 100)
    assert dec.tails[0] == [2] and dec.blocks[1] == [1, 1, 2]


def test_fixed_point_prefix():
    a = generate_reference(1, 20000)
    assert curling_transform(a) == a


def test_level_floor():
    for m in (1, 2, 3, 4):
        assert all(v >= m for v in generate_reference(m, 2000))


def test_contains_following_values():
    for m in (1, 2, 3):
        prefix = generate_reference(m, 3000)
        for t in (m, m + 1, m + 2):
            assert t in prefix


def test_repetition_power_scan():
    # any (t+1)-fold repeated substring with t >= m consists of values >= t
    for m in (1, 2, 3):
        u = generate_reference(m, 3000)
        L = len(u)
        for p in range(1, 13):
            chain = 0
            for i in range(p, L):
                chain = chain + 1 if u[i] == u[i - p] else 0
                k = chain // p + 1
                if k >= m + 1:
                    t = k - 1
                    seg = u[i + 1 - k * p : i + 1]
                    assert min(seg) >= t, (m, p, i, k)

"""Square-free matching statistics end to end."""

import pytest
from hypothesis import given, settings, strategies as st

from propfactor import (
    brute_longest_common_squarefree,
    build_sqms_index,
    load_text,
    sqms_query,
)

texts = st.text(alphabet="ab", min_size=1, max_size=32) | st.text(
    alphabet="abc", min_size=1, max_size=32)


def _has_square(c):
    for i in range(len(c)):
        for half in range(1, (len(c) - i) // 2 + 1):
            if c[i:i + half] == c[i + half:i + 2 * half]:
                return True
    return False


def test_frozen_example():
    idx = build_sqms_index(load_text("aababaababb"))
    res = sqms_query(idx, load_text("babababbaaab"))
    assert res.values.tolist() == [3, 3, 3, 3, 3, 2, 1, 2, 1, 1, 2, 1]
    assert res.best_length == 3
    assert res.witness == (2, 0, 3)
    assert "aababaababb"[2:5] == "bab"


def test_index_reuse_and_no_match():
    idx = build_sqms_index(load_text("aaaa"))
    res = sqms_query(idx, load_text("bbbb"))
    assert res.best_length == 0 and res.witness is None
    assert res.values.tolist() == [0, 0, 0, 0]
    # same index, second query
    res = sqms_query(idx, load_text("ba"))
    assert res.values.tolist() == [0, 1]
    assert res.witness == (0, 1, 1)


def test_empty_query():
    res = sqms_query(build_sqms_index(load_text("ab")), load_text(""))
    assert res.best_length == 0 and res.witness is None and len(res.values) == 0


@settings(deadline=None)
@given(texts, texts)
def test_values_vs_naive(x, y):
    res = sqms_query(build_sqms_index(load_text(x)), load_text(y))
    for j, got in enumerate(res.values.tolist()):
        want = 0
        for l in range(len(y) - j, 0, -1):
            c = y[j:j + l]
            if c in x and not _has_square(c):
                want = l
                break
        assert got == want


@settings(deadline=None)
@given(texts, texts)
def test_best_matches_brute_and_witness_is_sound(x, y):
    res = sqms_query(build_sqms_index(load_text(x)), load_text(y))
    assert res.best_length == brute_longest_common_squarefree(x, y)
    if res.best_length:
        w = res.witness
        assert w.length == res.best_length
        factor = y[w.y_pos:w.y_pos + w.length]
        assert x[w.x_pos:w.x_pos + w.length] == factor
        assert not _has_square(factor)
    else:
        assert res.witness is None

"""Runs and the square boundary arrays."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from propfactor import (
    brute_runs,
    compute_runs,
    load_text,
    longest_squarefree_start_array,
    shortest_square_after_array,
    shortest_square_start_array,
    smallest_period,
)

texts = st.text(alphabet="ab", min_size=1, max_size=48) | st.text(
    alphabet="abc", min_size=1, max_size=48)


def test_runs_frozen():
    assert compute_runs(load_text("aababaababb")).as_tuples() == [
        (0, 1, 1), (0, 9, 5), (1, 5, 2), (3, 8, 3),
        (5, 6, 1), (6, 9, 2), (9, 10, 1),
    ]
    assert compute_runs(load_text("ababbabba")).as_tuples() == [
        (0, 3, 2), (1, 8, 3), (3, 4, 1), (6, 7, 1),
    ]
    assert compute_runs(load_text("ababaab")).as_tuples() == [
        (0, 4, 2), (4, 5, 1),
    ]
    assert compute_runs(load_text("mississippi")).as_tuples() == [
        (1, 7, 3), (2, 3, 1), (5, 6, 1), (8, 9, 1),
    ]


def test_runs_trivial_inputs():
    assert compute_runs(load_text("")).as_tuples() == []
    assert compute_runs(load_text("a")).as_tuples() == []
    assert compute_runs(load_text("ab")).as_tuples() == []
    assert compute_runs(load_text("aa")).as_tuples() == [(0, 1, 1)]


@settings(deadline=None)
@given(texts)
def test_runs_match_brute(s):
    assert [tuple(r) for r in compute_runs(load_text(s))] == brute_runs(s)


@settings(deadline=None)
@given(texts)
def test_runs_properties(s):
    t = load_text(s)
    runs = compute_runs(t)
    n = len(t)
    assert len(runs) < n or n == 0
    seen = set()
    for a, b, p in runs:
        assert 0 <= a and b < n
        assert b - a + 1 >= 2 * p
        assert smallest_period(t.factor(a, b + 1)) == p
        assert (a, b) not in seen  # one run per interval
        seen.add((a, b))
        # maximal both ways for its period
        assert a == 0 or s[a - 1] != s[a - 1 + p]
        assert b == n - 1 or s[b + 1] != s[b + 1 - p]


def test_smallest_period_cases():
    assert smallest_period("") == 0
    assert smallest_period("a") == 1
    assert smallest_period("aa") == 1
    assert smallest_period("ab") == 2
    assert smallest_period("abab") == 2
    assert smallest_period("aabaa") == 3
    assert smallest_period("abcab") == 3
    assert smallest_period(load_text("aabab")) == 5


def test_boundary_arrays_frozen():
    t = load_text("aababaababb")
    runs = compute_runs(t)
    at = shortest_square_start_array(t, runs)
    after = shortest_square_after_array(t, runs)
    free = longest_squarefree_start_array(after, at, len(t))
    assert at.tolist() == [2, 4, 4, 6, 12, 2, 4, 12, 12, 2, 12]
    assert after.tolist() == [5, 6, 5, 4, 3, 5, 5, 4, 3, 12, 12]
    assert free.tolist() == [1, 3, 3, 3, 2, 1, 3, 3, 2, 1, 1]


def _squares(s):
    n = len(s)
    out = []
    for l in range(n):
        for half in range(1, (n - l) // 2 + 1):
            if s[l:l + half] == s[l + half:l + 2 * half]:
                out.append((l, half))
    return out


def _square_free(c):
    return not _squares(c)


@settings(deadline=None)
@given(texts)
def test_boundary_arrays_vs_naive(s):
    t = load_text(s)
    n = len(t)
    runs = compute_runs(t)
    sq = _squares(s)

    at = shortest_square_start_array(t, runs)
    want_at = [min([2 * p for (l, p) in sq if l == i], default=n + 1) for i in range(n)]
    assert at.tolist() == want_at

    # the after array tracks the leftmost square of each later run only;
    # anything starting inside an earlier run is already beaten at `at`
    after = shortest_square_after_array(t, runs)
    want_after = [min([a + 2 * p - i for (a, _, p) in runs if a > i], default=n + 1)
                  for i in range(n)]
    assert after.tolist() == want_after

    free = longest_squarefree_start_array(after, at, n)
    for i in range(n):
        best = 0
        for stop in range(i, n + 1):
            if _square_free(s[i:stop]):
                best = stop - i
            else:
                break
        assert free[i] == best


def test_boundary_arrays_empty_runs():
    t = load_text("ab")
    runs = compute_runs(t)
    assert shortest_square_start_array(t, runs).tolist() == [3, 3]
    assert shortest_square_after_array(t, runs).tolist() == [3, 3]
    assert longest_squarefree_start_array(
        shortest_square_after_array(t, runs),
        shortest_square_start_array(t, runs), 2).tolist() == [2, 1]

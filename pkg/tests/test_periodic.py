"""Longest periodic common factor, both routes against each other and brute."""

import pytest
from hypothesis import given, settings, strategies as st

from propfactor import (
    InputError,
    LpcfQuery,
    RunContribution,
    brute_lpcf,
    build_generalized_suffix_tree,
    color_set_size,
    compute_runs,
    join_texts,
    load_text,
    lpcf_nearest_good_ancestor,
    lpcf_weighted_ancestor,
    mark_candidates,
    smallest_period,
)

texts = st.text(alphabet="ab", min_size=1, max_size=24)
collections = st.lists(texts, min_size=2, max_size=4)


def test_threshold_validation():
    for bad in (0, 1, 3, -2):
        with pytest.raises(InputError):
            LpcfQuery(["ab", "ba"], bad)
    assert LpcfQuery(["ab", "ba", "aa"], 3).k == 3


def test_two_string_example():
    q = LpcfQuery(["ababbabba", "ababaab"], 2)
    for solve in (lpcf_weighted_ancestor, lpcf_nearest_good_ancestor):
        res = solve(q)
        assert res.length == 4
        assert res.period == 2
        assert res.witness == (0, 0)
        w = res.witness
        assert q.texts[w.string].factor(w.start, w.start + 4).to_str() == "abab"


def test_trace_reports_capped_run():
    q = LpcfQuery(["ababaa", "bababb"], 2)
    assert lpcf_weighted_ancestor(q).length == 4
    res = lpcf_nearest_good_ancestor(q, return_trace=True)
    assert res.length == 4
    rec = [r for r in res.trace if (r.string, r.start, r.end) == (0, 0, 4)]
    assert rec == [RunContribution(string=0, start=0, end=4, period=2,
                                   good_depth=4, contribution=4)]
    # the full run (length 5) exceeds its shared depth; its period fits twice
    assert 2 * rec[0].period <= rec[0].good_depth < rec[0].end - rec[0].start + 1


def test_no_periodic_common_factor():
    q = LpcfQuery(["ab", "ba"], 2)
    for solve in (lpcf_weighted_ancestor, lpcf_nearest_good_ancestor):
        res = solve(q)
        assert res.length == 0 and res.period == 0 and res.witness is None


def test_threshold_below_string_count():
    q = LpcfQuery(["aabab", "abab", "bbb"], 2)
    assert lpcf_weighted_ancestor(q).length == 4
    assert lpcf_nearest_good_ancestor(q).length == 4
    q3 = LpcfQuery(["aabab", "abab", "bbb"], 3)
    assert lpcf_weighted_ancestor(q3).length == 0
    assert lpcf_nearest_good_ancestor(q3).length == 0


def test_candidate_marks():
    strings = ["ababbabba", "ababaab"]
    gst = build_generalized_suffix_tree(join_texts(strings))
    mark = mark_candidates(gst, [compute_runs(load_text(t)) for t in strings])
    hits = [v for v in range(gst.n_nodes) if mark[v]]
    assert hits
    for v in hits:
        node = gst.node(v)
        path = gst.path_of(v)
        assert 2 * node.period <= node.string_depth
        assert smallest_period(path) == node.period


@settings(deadline=None)
@given(collections, st.data())
def test_routes_agree_with_brute(strings, data):
    k_prime = data.draw(st.integers(2, len(strings)))
    q = LpcfQuery(strings, k_prime)
    want = brute_lpcf(strings, k_prime)
    wa = lpcf_weighted_ancestor(q)
    nga = lpcf_nearest_good_ancestor(q)
    assert wa.length == want
    assert nga.length == want
    for res in (wa, nga):
        if res.length == 0:
            assert res.witness is None
            continue
        w = res.witness
        factor = strings[w.string][w.start:w.start + res.length]
        assert len(factor) == res.length
        assert sum(factor in s for s in strings) >= k_prime
        p = smallest_period(factor)
        assert res.length >= 2 * p
        assert res.period == p

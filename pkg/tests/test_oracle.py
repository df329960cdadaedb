"""Hand-checked answers for the brute-force references themselves."""

import pytest

from propfactor import (
    InputError,
    brute_longest_common_squarefree,
    brute_lpalcf,
    brute_lpcf,
    brute_runs,
)


def test_runs_by_hand():
    assert brute_runs("ab") == []
    assert brute_runs("abab") == [(0, 3, 2)]
    assert brute_runs("aaaa") == [(0, 3, 1)]
    assert brute_runs("aabaa") == [(0, 1, 1), (3, 4, 1)]
    assert brute_runs([7, 7, 7]) == [(0, 2, 1)]


def test_common_squarefree_by_hand():
    assert brute_longest_common_squarefree("aa", "aa") == 1
    assert brute_longest_common_squarefree("ab", "ba") == 1
    assert brute_longest_common_squarefree("abc", "xabcx") == 3
    assert brute_longest_common_squarefree("aaaa", "aa") == 1
    assert brute_longest_common_squarefree("ab", "cd") == 0


def test_lpcf_by_hand():
    assert brute_lpcf(("abab", "abab"), 2) == 4
    assert brute_lpcf(("ab", "ba"), 2) == 0
    assert brute_lpcf(("aa", "aa"), 2) == 2
    assert brute_lpcf(("aabaab", "xaabaabx"), 2) == 6
    assert brute_lpcf(("aa", "aa", "bb"), 3) == 0
    assert brute_lpcf(("aa", "aa", "bb"), 2) == 2
    with pytest.raises(InputError):
        brute_lpcf(("aa", "aa"), 1)
    with pytest.raises(InputError):
        brute_lpcf(("aa", "aa"), 3)


def test_lpalcf_by_hand():
    assert brute_lpalcf("aba", "xbabx") == 1
    assert brute_lpalcf("abba", "bb") == 2
    assert brute_lpalcf("ab", "ba") == 1
    assert brute_lpalcf("a", "b") == 0


def test_size_caps():
    with pytest.raises(InputError):
        brute_runs("a" * 257)
    with pytest.raises(InputError):
        brute_longest_common_squarefree("a" * 65, "a")
    with pytest.raises(InputError):
        brute_lpcf(("a" * 65, "a"), 2)
    with pytest.raises(InputError):
        brute_lpalcf("a" * 65, "a")
    # at the caps everything still answers
    assert brute_runs("ab" * 128) == [(0, 255, 2)]
    assert brute_lpalcf("a" * 64, "a" * 64) == 64

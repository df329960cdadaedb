"""Maximal periodic factors (runs) and the square boundary arrays.

A run is an inclusive interval [start, end] whose factor has smallest
period `period` with end - start + 1 >= 2 * period, extendable in
neither direction without breaking that period.  Every square occurrence
in the text lies inside exactly one run, which is what the boundary
arrays exploit.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .suffix_array import lce_batch, suffix_array
from .text import Text, load_text


class Run(NamedTuple):
    start: int
    end: int      # inclusive
    period: int   # smallest period of the factor


class Runs:
    """All runs of one text, sorted by (start, end, period), as arrays."""

    def __init__(self, start: np.ndarray, end: np.ndarray, period: np.ndarray):
        self.start = start
        self.end = end
        self.period = period

    def __len__(self) -> int:
        return len(self.start)

    def __getitem__(self, i: int) -> Run:
        return Run(int(self.start[i]), int(self.end[i]), int(self.period[i]))

    def __iter__(self):
        for a, b, p in zip(self.start.tolist(), self.end.tolist(), self.period.tolist()):
            yield Run(a, b, p)

    def as_tuples(self) -> list[Run]:
        return list(self)

    def __repr__(self) -> str:
        return f"Runs({self.as_tuples()!r})"


def _nsv_distance(rank: np.ndarray) -> np.ndarray:
    """Per index, distance to the next strictly smaller value (len(rank) - i
    when none exists).  Values must be distinct."""
    rl = rank.tolist()
    n = len(rl)
    out = [n] * n
    stack: list[int] = []
    for j in range(n):
        v = rl[j]
        while stack and rl[stack[-1]] > v:
            out[stack.pop()] = j
        stack.append(j)
    res = np.array(out, dtype=np.int64)
    return res - np.arange(n, dtype=np.int64)


def compute_runs(t) -> Runs:
    """All runs of t.

    Shortest suffixes sorted under the symbol order and under its reverse
    give, per position, the longest prefix of the suffix that is Lyndon
    in that order (the next-smaller-value distance in the rank array).
    Each such prefix is a candidate periodicity; extending it with
    common-extension queries both ways and keeping the intervals that fit
    the period twice yields every run exactly once, with its smallest
    period (a Lyndon factor is primitive, so a shorter period would
    contradict the periodicity lemma inside the extended interval).
    """
    t = load_text(t)
    n = len(t)
    empty = np.empty(0, dtype=np.int64)
    if n < 2:
        return Runs(empty, empty, empty)
    keys = t.symbols.astype(np.int64)
    _, rank_fwd, lev_fwd = suffix_array(keys, return_levels=True)
    _, rank_flip = suffix_array(-keys)
    _, _, lev_rev = suffix_array(keys[::-1], return_levels=True)

    idx = np.arange(n, dtype=np.int64)
    cand_i = np.concatenate([idx, idx])
    cand_p = np.concatenate([_nsv_distance(rank_fwd), _nsv_distance(rank_flip)])
    pairs = np.unique(np.stack([cand_i, cand_p], axis=1), axis=0)
    i = pairs[:, 0]
    p = pairs[:, 1]

    fwd = lce_batch(lev_fwd, n, i, i + p)
    back = lce_batch(lev_rev, n, n - i - p, n - i)
    start = i - back
    end = i + p - 1 + fwd
    keep = end - start + 1 >= 2 * p
    rows = np.unique(np.stack([start[keep], end[keep], p[keep]], axis=1), axis=0)
    return Runs(rows[:, 0].copy(), rows[:, 1].copy(), rows[:, 2].copy())


def smallest_period(factor) -> int:
    """Smallest period of a symbol sequence (need not divide its length)."""
    if isinstance(factor, Text):
        s = factor.symbols.tolist()
    elif isinstance(factor, np.ndarray):
        s = factor.tolist()
    elif isinstance(factor, str):
        s = [ord(c) for c in factor]
    else:
        s = [int(c) for c in factor]
    m = len(s)
    if m == 0:
        return 0
    fail = [0] * m
    k = 0
    for q in range(1, m):
        while k and s[q] != s[k]:
            k = fail[k - 1]
        if s[q] == s[k]:
            k += 1
        fail[q] = k
    return m - fail[-1]


def shortest_square_start_array(t, runs: Runs) -> np.ndarray:
    """Per position, the length of the shortest square starting there.

    n + 1 plays infinity.  A square starting at i sits in a run covering
    it, whose own period-length square also starts at i; so the answer is
    the minimum of 2 * period over runs whose square window covers i.
    Runs are painted in increasing period order onto untouched cells,
    skipping painted stretches through a next-pointer forest.
    """
    t = load_text(t)
    n = len(t)
    vals = [n + 1] * n
    if len(runs):
        order = np.argsort(runs.period, kind="stable")
        starts = runs.start[order].tolist()
        ends = runs.end[order].tolist()
        periods = runs.period[order].tolist()
        nxt = list(range(n + 2))

        def find(i: int) -> int:
            root = i
            while nxt[root] != root:
                root = nxt[root]
            while nxt[i] != root:
                nxt[i], i = root, nxt[i]
            return root

        for a, b, p in zip(starts, ends, periods):
            hi = b - 2 * p + 1
            two = 2 * p
            i = find(a)
            while i <= hi:
                vals[i] = two
                nxt[i] = i + 1
                i = find(i + 1)
    return np.array(vals, dtype=np.int64)


def shortest_square_after_array(t, runs: Runs) -> np.ndarray:
    """Per position i, min over squares starting past i of (end - i).

    n + 1 plays infinity.  Only a run starting at some a > i can beat the
    squares already counted at i itself, and its cheapest square is the
    leftmost one, ending at a + 2p.  Scanning runs by a + 2p ascending
    and walking left from a - 1 until hitting an already-assigned cell
    fills every cell with its minimum; the assigned region is always a
    prefix, so each cell is visited once.
    """
    t = load_text(t)
    n = len(t)
    vals = [n + 1] * n
    if len(runs):
        reach = (runs.start + 2 * runs.period).astype(np.int64)
        order = np.argsort(reach, kind="stable")
        starts = runs.start[order].tolist()
        reach_l = reach[order].tolist()
        top = -1
        for a, e in zip(starts, reach_l):
            for i in range(a - 1, top, -1):
                vals[i] = e - i
            if a - 1 > top:
                top = a - 1
    return np.array(vals, dtype=np.int64)


def longest_squarefree_start_array(after: np.ndarray, at: np.ndarray, n: int) -> np.ndarray:
    """Per position, the length of the longest square-free factor starting
    there: one less than the nearest square end among those starting at
    the position, those starting past it, and the suffix boundary."""
    bound = np.minimum(np.minimum(after, at), n - np.arange(n, dtype=np.int64) + 1)
    return bound - 1

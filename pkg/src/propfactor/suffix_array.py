"""Suffix orderings: prefix-doubling suffix array, LCP array, range minima.

Suffix comparisons treat end-of-string as smaller than every symbol, which
is the same order an appended unique minimal terminator would induce.
"""

from __future__ import annotations

import numpy as np


def suffix_array(keys: np.ndarray, return_levels: bool = False):
    """Sort all suffixes of an integer sequence by prefix doubling.

    Returns (sa, rank) where rank is the inverse permutation, or
    (sa, rank, levels) with the intermediate rank array per doubling step
    when `return_levels` is set; levels support O(log n) common-extension
    queries without a separate LCP structure.
    """
    n = len(keys)
    if n == 0:
        empty = np.empty(0, dtype=np.int64)
        return (empty, empty, []) if return_levels else (empty, empty)
    rank = np.unique(np.asarray(keys), return_inverse=True)[1].astype(np.int64).reshape(n)
    levels = [rank.astype(np.int32)]
    k = 1
    order = np.argsort(rank, kind="stable")
    if int(rank[order[-1]]) < n - 1:
        while True:
            # combined key: current rank, then rank k ahead (end-of-string lowest)
            key = rank * (n + 1)
            key[: n - k] += rank[k:] + 1
            order = np.argsort(key, kind="stable")
            ko = key[order]
            rank = np.empty(n, dtype=np.int64)
            rank[order] = np.concatenate(([0], np.cumsum(ko[1:] != ko[:-1])))
            if return_levels:
                levels.append(rank.astype(np.int32))
            if int(rank[order[-1]]) == n - 1:
                break
            k *= 2
    if return_levels:
        return order, rank, levels
    return order, rank


def lcp_array(keys, sa: np.ndarray, rank: np.ndarray) -> np.ndarray:
    """LCP of lexicographically adjacent suffixes, by rank-chasing.

    lcp[t] = |longest common prefix of suffixes sa[t-1] and sa[t]|, lcp[0] = 0.
    """
    n = len(sa)
    lcp = [0] * n
    if n == 0:
        return np.empty(0, dtype=np.int64)
    sym = keys.tolist() if isinstance(keys, np.ndarray) else list(keys)
    sal = sa.tolist()
    rankl = rank.tolist()
    h = 0
    for i in range(n):
        r = rankl[i]
        if r > 0:
            j = sal[r - 1]
            m = n - (i if i > j else j)
            while h < m and sym[i + h] == sym[j + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return np.array(lcp, dtype=np.int64)


def lce_batch(levels: list[np.ndarray], n: int, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Common-extension lengths for position pairs, from doubling levels.

    Equal level-k ranks mean the 2**k-symbol windows match, so walk the
    levels high to low advancing both cursors on a match.
    """
    a = np.asarray(left, dtype=np.int64).copy()
    b = np.asarray(right, dtype=np.int64).copy()
    out = np.zeros(len(a), dtype=np.int64)
    eq = a == b
    if eq.any():
        # the level walk only resolves distinct suffixes; equal ones are whole
        out[eq] = n - a[eq]
        a[eq] = n
        b[eq] = n
    for k in range(len(levels) - 1, -1, -1):
        width = 1 << k
        lev = levels[k]
        ok = (a < n) & (b < n)
        idx = np.flatnonzero(ok)
        if len(idx) == 0:
            break
        same = lev[a[idx]] == lev[b[idx]]
        hit = idx[same]
        out[hit] += width
        a[hit] += width
        b[hit] += width
    return np.minimum(out, np.minimum(n - np.asarray(left), n - np.asarray(right)))


class SparseMin:
    """Static range-minimum structure with vectorized batch queries."""

    def __init__(self, values: np.ndarray):
        # int32 levels: inputs are lengths or depths, far below the limit
        v = np.asarray(values, dtype=np.int32)
        self.n = len(v)
        self.table = [v]
        k = 1
        while 2 * k <= self.n:
            prev = self.table[-1]
            self.table.append(np.minimum(prev[:-k], prev[k:]))
            k *= 2

    def query_batch(self, lo: np.ndarray, hi: np.ndarray, empty: int) -> np.ndarray:
        """Minimum over values[lo..hi] inclusive per pair; `empty` when lo > hi."""
        lo = np.asarray(lo, dtype=np.int64)
        hi = np.asarray(hi, dtype=np.int64)
        out = np.full(len(lo), empty, dtype=np.int64)
        ok = lo <= hi
        if not ok.any():
            return out
        span = hi[ok] - lo[ok] + 1
        k = np.frexp(span.astype(np.float64))[1] - 1
        l, h = lo[ok], hi[ok]
        res = np.empty(len(l), dtype=np.int64)
        for kk in np.unique(k):
            m = k == kk
            t = self.table[kk]
            res[m] = np.minimum(t[l[m]], t[h[m] - (1 << int(kk)) + 1])
        out[ok] = res
        return out

    def query(self, lo: int, hi: int, empty: int) -> int:
        return int(self.query_batch(np.array([lo]), np.array([hi]), empty)[0])

    def extend_left_batch(self, pos: np.ndarray, threshold: np.ndarray) -> np.ndarray:
        """Largest e per query with values[pos-e+1..pos] all >= threshold.

        Greedy power-of-two jumps from high to low; each jump is taken only
        when its whole window clears the threshold, which reaches the exact
        maximal extension.
        """
        cur = np.asarray(pos, dtype=np.int64).copy()
        thr = np.asarray(threshold, dtype=np.int64)
        for k in range(len(self.table) - 1, -1, -1):
            width = 1 << k
            t = self.table[k]
            start = cur - width + 1
            ok = start >= 0
            idx = np.flatnonzero(ok)
            if len(idx) == 0:
                continue
            good = t[start[idx]] >= thr[idx]
            cur[idx[good]] -= width
        return np.asarray(pos, dtype=np.int64) - cur

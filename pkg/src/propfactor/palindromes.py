"""Longest common palindromic factor of two strings.

Every palindromic factor sits centered inside the maximal palindrome
with the same center, so it is determined by a prefix of that
palindrome's right arm.  Comparing the arm sets of the two strings
reduces the problem to: over all pairs (arm of x, arm of y) of the same
parity, find the longest common prefix.  Odd parity contributes twice
that minus one (arms share the center symbol), even parity twice that.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .suffix_array import SparseMin, lcp_array, suffix_array
from .text import InputError, JoinedText, Text, join_texts, load_text


class MaximalPalindrome(NamedTuple):
    """Maximal palindrome t[start..end]; center2 = start + end walks the
    n integer and n-1 half-integer centers, radius2 = its length (0 for
    an empty even-center palindrome)."""
    center2: int
    radius2: int
    start: int
    end: int


class PalindromicArm(NamedTuple):
    """Right half of a maximal palindrome, center symbol included when
    the length is odd.  start/length index the owning text."""
    center2: int
    start: int
    length: int


class Palindromes:
    """Maximal palindromes of one text, ascending by center, as arrays."""

    def __init__(self, center2, radius2, start, end):
        self.center2 = center2
        self.radius2 = radius2
        self.start = start
        self.end = end

    def __len__(self) -> int:
        return len(self.center2)

    def __getitem__(self, i: int) -> MaximalPalindrome:
        return MaximalPalindrome(int(self.center2[i]), int(self.radius2[i]),
                                 int(self.start[i]), int(self.end[i]))

    def __iter__(self):
        for row in zip(self.center2.tolist(), self.radius2.tolist(),
                       self.start.tolist(), self.end.tolist()):
            yield MaximalPalindrome(*row)


class Arms:
    """Palindromic arms of one text, ascending by center, as arrays."""

    def __init__(self, center2, start, length):
        self.center2 = center2
        self.start = start
        self.length = length

    def __len__(self) -> int:
        return len(self.center2)

    def __getitem__(self, i: int) -> PalindromicArm:
        return PalindromicArm(int(self.center2[i]), int(self.start[i]),
                              int(self.length[i]))

    def __iter__(self):
        for row in zip(self.center2.tolist(), self.start.tolist(),
                       self.length.tolist()):
            yield PalindromicArm(*row)


class LpalcfResult(NamedTuple):
    length: int
    factor: Text | None
    x_start: int | None
    y_start: int | None


def _manacher(s: list[int]) -> tuple[list[int], list[int]]:
    """Classic two-pass radii: odd[i] counts symbols in the right arm of
    the widest odd palindrome centered at i (center included); even[i]
    counts them for the widest even palindrome centered between i-1 and
    i (so even[i] = 0 means none)."""
    n = len(s)
    odd = [0] * n
    lo, hi = 0, -1
    for i in range(n):
        k = 1 if i > hi else min(odd[lo + hi - i], hi - i + 1)
        while i - k >= 0 and i + k < n and s[i - k] == s[i + k]:
            k += 1
        odd[i] = k
        if i + k - 1 > hi:
            lo, hi = i - k + 1, i + k - 1
    even = [0] * n
    lo, hi = 0, -1
    for i in range(n):
        k = 0 if i > hi else min(even[lo + hi - i + 1], hi - i + 1)
        while i - k - 1 >= 0 and i + k < n and s[i - k - 1] == s[i + k]:
            k += 1
        even[i] = k
        if i + k - 1 > hi:
            lo, hi = i - k, i + k - 1
    return odd, even


def maximal_palindromes(t) -> Palindromes:
    """All 2|t|-1 maximal palindromes, one per center, ascending."""
    t = load_text(t)
    n = len(t)
    if n == 0:
        raise InputError("maximal palindromes need a nonempty text")
    d_odd, d_even = _manacher(t.symbols.tolist())
    center2 = np.arange(2 * n - 1, dtype=np.int64)
    radius2 = np.empty(2 * n - 1, dtype=np.int64)
    radius2[0::2] = 2 * np.array(d_odd, dtype=np.int64) - 1
    if n > 1:
        radius2[1::2] = 2 * np.array(d_even[1:], dtype=np.int64)
    start = (center2 - radius2 + 1) // 2
    end = (center2 + radius2 - 1) // 2
    return Palindromes(center2, radius2, start, end)


def collect_arms(t, pals: Palindromes) -> Arms:
    """Right halves of the maximal palindromes, center symbol included
    for odd lengths; empty even-center palindromes contribute nothing."""
    load_text(t)
    g = pals.center2
    r2 = pals.radius2
    odd = g % 2 == 0
    even = (~odd) & (r2 > 0)
    center2 = np.concatenate([g[odd], g[even]])
    start = np.concatenate([g[odd] // 2, (g[even] - 1) // 2 + 1])
    length = np.concatenate([(r2[odd] + 1) // 2, r2[even] // 2])
    order = np.argsort(center2, kind="stable")
    return Arms(center2[order], start[order], length[order])


class SuffixOrder:
    """Shared suffix ordering of a joined collection: suffix array, its
    inverse, adjacent LCPs, and a range-minimum table over them."""

    def __init__(self, joined: JoinedText):
        self.joined = joined
        self.sa, self.rank = suffix_array(joined.symbols)
        self.lcp = lcp_array(joined.symbols, self.sa, self.rank)
        self.rmq = SparseMin(self.lcp)


def _cross_best(order: SuffixOrder, starts_g: np.ndarray, lengths: np.ndarray,
                origins: np.ndarray):
    """Max length-capped LCP over pairs of opposite-origin entries.

    Entries are prefixes (given by global start and length) of suffixes
    of the joined text.  Sorting them by (left end of the LCP interval
    at their own length, length) is exactly lexicographic order of the
    capped strings; then the best cross pair is realized, for some
    entry, against the nearest earlier entry of the other origin, with
    the pair LCP being the minimum capped LCP over the gap.

    Returns (best, (row_a, row_b)) with rows indexing the inputs, origin
    0 first; (0, None) when no positive cross LCP exists.
    """
    m = len(starts_g)
    if m == 0 or int(origins.min()) == int(origins.max()):
        return 0, None
    r = order.rank[starts_g]
    left = r - order.rmq.extend_left_batch(r, lengths)
    perm = np.lexsort((starts_g, lengths, left))
    rs = r[perm]
    ls = lengths[perm]
    os_ = origins[perm]
    gs = starts_g[perm]

    a, b = rs[:-1], rs[1:]
    adj = order.rmq.query_batch(np.minimum(a, b) + 1, np.maximum(a, b),
                                empty=1 << 40)
    adj = np.minimum(adj, np.minimum(ls[:-1], ls[1:]))
    gap = SparseMin(adj)

    idx = np.arange(m, dtype=np.int64)
    last = [np.maximum.accumulate(np.where(os_ == o, idx, -1)) for o in (0, 1)]
    packs = []
    for want in (0, 1):
        prev = last[1 - want]
        ks = np.flatnonzero((os_ == want) & (prev >= 0))
        if len(ks) == 0:
            continue
        js = prev[ks]
        vals = gap.query_batch(js, ks - 1, empty=0)
        packs.append((want, ks, js, vals))
    best = max((int(v.max()) for _, _, _, v in packs), default=0)
    if best <= 0:
        return 0, None

    cand_x, cand_y = [], []
    for want, ks, js, vals in packs:
        hitk = ks[vals == best]
        hitj = js[vals == best]
        if want == 1:
            cand_x.append(hitj)
            cand_y.append(hitk)
        else:
            cand_x.append(hitk)
            cand_y.append(hitj)
    xs = np.concatenate(cand_x)
    ys = np.concatenate(cand_y)
    pick = int(np.lexsort((gs[ys], gs[xs]))[0])
    return best, (int(perm[xs[pick]]), int(perm[ys[pick]]))


def max_cross_lcp(arms_x: Arms, arms_y: Arms, order: SuffixOrder) -> tuple[int, int]:
    """Per parity, the max length-capped LCP between an arm of x and an
    arm of y, under the given joined suffix ordering.  Returns
    (odd-center best, even-center best)."""
    base_x = int(order.joined.starts[0])
    base_y = int(order.joined.starts[1])
    out = []
    for parity in (0, 1):
        mx = arms_x.center2 % 2 == parity
        my = arms_y.center2 % 2 == parity
        starts = np.concatenate([base_x + arms_x.start[mx], base_y + arms_y.start[my]])
        lengths = np.concatenate([arms_x.length[mx], arms_y.length[my]])
        origins = np.concatenate([np.zeros(int(mx.sum()), dtype=np.int64),
                                  np.ones(int(my.sum()), dtype=np.int64)])
        out.append(_cross_best(order, starts, lengths, origins)[0])
    return out[0], out[1]


def lpalcf(x, y) -> LpalcfResult:
    """Longest common palindromic factor of two nonempty strings.

    Odd and even centers are solved separately over the arm sets; the
    better parity's achieving arm pair is mirrored about its center to
    reconstruct a witness occurrence in each string.
    """
    x = load_text(x)
    y = load_text(y)
    if len(x) == 0 or len(y) == 0:
        raise InputError("longest common palindromic factor needs nonempty strings")
    joined = join_texts([x, y])
    order = SuffixOrder(joined)
    arms_x = collect_arms(x, maximal_palindromes(x))
    arms_y = collect_arms(y, maximal_palindromes(y))
    base_x = int(joined.starts[0])
    base_y = int(joined.starts[1])

    found = {}
    for parity in (0, 1):
        mx = np.flatnonzero(arms_x.center2 % 2 == parity)
        my = np.flatnonzero(arms_y.center2 % 2 == parity)
        starts = np.concatenate([base_x + arms_x.start[mx], base_y + arms_y.start[my]])
        lengths = np.concatenate([arms_x.length[mx], arms_y.length[my]])
        origins = np.concatenate([np.zeros(len(mx), dtype=np.int64),
                                  np.ones(len(my), dtype=np.int64)])
        ell, pair = _cross_best(order, starts, lengths, origins)
        found[parity] = (ell, pair, mx, my)

    ell_odd, pair_odd, mx_o, my_o = found[0]
    ell_even, pair_even, mx_e, my_e = found[1]
    total_odd = 2 * ell_odd - 1 if ell_odd >= 1 else 0
    total_even = 2 * ell_even
    if max(total_odd, total_even) == 0:
        return LpalcfResult(0, None, None, None)

    if total_odd > total_even:
        row_x, row_y = pair_odd
        cx = int(arms_x.start[mx_o[row_x]])
        cy = int(arms_y.start[my_o[row_y - len(mx_o)]])
        x_start = cx - ell_odd + 1
        y_start = cy - ell_odd + 1
        length = total_odd
    else:
        row_x, row_y = pair_even
        sx = int(arms_x.start[mx_e[row_x]])
        sy = int(arms_y.start[my_e[row_y - len(mx_e)]])
        x_start = sx - ell_even
        y_start = sy - ell_even
        length = total_even
    return LpalcfResult(length, x.factor(x_start, x_start + length), x_start, y_start)

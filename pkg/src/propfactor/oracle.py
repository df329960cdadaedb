"""Brute-force reference answers for cross-checking the fast paths.

Everything here enumerates factors directly from the definitions: no
suffix structures, no run shortcuts, no code shared with the algorithm
modules.  Sizes are capped; exceeding a cap raises InputError.
"""

from __future__ import annotations

from .text import InputError, Text

RUNS_CAP = 256
COMMON_CAP = 64


def _seq(t) -> tuple:
    if isinstance(t, Text):
        return tuple(t.symbols.tolist())
    if isinstance(t, str):
        return tuple(ord(c) for c in t)
    if isinstance(t, (bytes, bytearray)):
        return tuple(t)
    return tuple(int(c) for c in t)


def brute_runs(t) -> list[tuple[int, int, int]]:
    """Runs by definition: for every start and period, extend the
    periodicity as far right as it goes; keep intervals that fit the
    period at least twice and cannot move one step left.  The smallest
    period per interval survives.

    Any emitted (start, end, p) is right- and left-maximal for the
    interval's smallest period too (the failing boundary symbol would
    contradict the periodicity inside), so emitted intervals are exactly
    the runs and the group minimum is the smallest period.
    """
    s = _seq(t)
    n = len(s)
    if n > RUNS_CAP:
        raise InputError(f"runs oracle cap is {RUNS_CAP} symbols, got {n}")
    best: dict[tuple[int, int], int] = {}
    for l in range(n):
        for p in range(1, (n - l) // 2 + 1):
            if l > 0 and s[l - 1] == s[l - 1 + p]:
                continue
            e = 0
            while l + p + e < n and s[l + e] == s[l + p + e]:
                e += 1
            r = l + p + e - 1
            if r - l + 1 >= 2 * p:
                key = (l, r)
                if p < best.get(key, n + 1):
                    best[key] = p
    return sorted((l, r, p) for (l, r), p in best.items())


def _substrings(s: tuple, length: int) -> set:
    return {s[i:i + length] for i in range(len(s) - length + 1)}


def _is_square_free(c: tuple) -> bool:
    n = len(c)
    for i in range(n):
        for half in range(1, (n - i) // 2 + 1):
            if c[i:i + half] == c[i + half:i + 2 * half]:
                return False
    return True


def _check_cap(seqs) -> None:
    for s in seqs:
        if len(s) > COMMON_CAP:
            raise InputError(f"oracle cap is {COMMON_CAP} symbols, got {len(s)}")


def brute_longest_common_squarefree(x, y) -> int:
    """Longest length of a square-free factor common to x and y,
    by descending-length enumeration."""
    sx, sy = _seq(x), _seq(y)
    _check_cap([sx, sy])
    for length in range(min(len(sx), len(sy)), 0, -1):
        have = _substrings(sx, length)
        seen = set()
        for j in range(len(sy) - length + 1):
            c = sy[j:j + length]
            if c in have and c not in seen:
                seen.add(c)
                if _is_square_free(c):
                    return length
    return 0


def _smallest_period_scan(c: tuple) -> int:
    n = len(c)
    for p in range(1, n):
        if all(c[i] == c[i + p] for i in range(n - p)):
            return p
    return n


def brute_lpcf(texts, k_prime: int) -> int:
    """Longest length of a periodic factor occurring in at least k_prime
    of the strings (periodic: length at least twice the smallest period)."""
    seqs = [_seq(t) for t in texts]
    k = len(seqs)
    if not 1 < int(k_prime) <= k:
        raise InputError(f"threshold must satisfy 1 < k_prime <= {k}, got {k_prime}")
    _check_cap(seqs)
    for length in range(max((len(s) for s in seqs), default=0), 1, -1):
        tables = [_substrings(s, length) for s in seqs]
        for c in set().union(*tables):
            if sum(1 for tab in tables if c in tab) >= k_prime:
                if length >= 2 * _smallest_period_scan(c):
                    return length
    return 0


def brute_lpalcf(x, y) -> int:
    """Longest length of a factor common to x and y equal to its own
    reversal."""
    sx, sy = _seq(x), _seq(y)
    _check_cap([sx, sy])
    for length in range(min(len(sx), len(sy)), 0, -1):
        have = _substrings(sx, length)
        for j in range(len(sy) - length + 1):
            c = sy[j:j + length]
            if c in have and c == c[::-1]:
                return length
    return 0

"""Longest periodic common factor across strings, by two routes.

A factor is periodic when its length is at least twice its smallest
period.  Given k strings and a threshold k', both routes return the
longest periodic factor occurring in at least k' of the strings: one
augments the generalized suffix tree with explicit run nodes and marks
periodic prefixes (candidate nodes), the other walks each run's leaf up
to its deepest widely-shared ancestor and caps the run there.

Both rest on the same fact: a longest answer must begin exactly where
some run begins, since any occurrence strictly inside a run extends one
symbol left to a longer common periodic factor (the added symbol is
forced by the period, hence equal everywhere the factor occurs).
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .repetitions import Runs, compute_runs
from .suffix_tree import SuffixTree, build_generalized_suffix_tree, color_set_size
from .text import InputError, Text, join_texts, load_text


class LpcfQuery:
    """k input strings plus the sharing threshold k' (1 < k' <= k)."""

    def __init__(self, texts: Sequence, k_prime: int):
        loaded = tuple(load_text(t) for t in texts)
        k = len(loaded)
        k_prime = int(k_prime)
        if not 1 < k_prime <= k:
            raise InputError(
                f"threshold must satisfy 1 < k_prime <= {k}, got {k_prime}")
        self.texts = loaded
        self.k_prime = k_prime

    @property
    def k(self) -> int:
        return len(self.texts)


class LpcfWitness(NamedTuple):
    string: int   # which input string the factor is taken from
    start: int    # local start position there


class RunContribution(NamedTuple):
    """Per-run record of the nearest-good-ancestor route."""
    string: int
    start: int
    end: int
    period: int
    good_depth: int     # depth of the deepest widely-shared prefix of the run
    contribution: int   # periodic common prefix length credited to this run


class LpcfResult:
    def __init__(self, length: int, period: int, witness: LpcfWitness | None,
                 trace: list[RunContribution] | None = None):
        self.length = length
        self.period = period
        self.witness = witness
        self.trace = trace

    def __repr__(self) -> str:
        return f"LpcfResult(length={self.length}, period={self.period}, witness={self.witness})"


def mark_candidates(gst: SuffixTree, runs_per_string: Sequence[Runs]) -> np.ndarray:
    """Augment the tree with run loci and flag periodic-prefix nodes.

    Each run's full factor gets an explicit node seeded with the run's
    period; minima propagate to ancestors, and a node is a candidate
    when twice its best seed fits in its depth.  Such a node spells a
    prefix of a run, so the seed is a period of its factor; being at
    most half the length, it is in fact the smallest period (two
    distinct periods that short would force a shorter period on the
    whole run).  Stores the flags on the tree and returns the mask.
    """
    if len(runs_per_string) != gst.k:
        raise InputError(
            f"need runs for {gst.k} strings, got {len(runs_per_string)}")
    g_start = []
    g_len = []
    g_per = []
    for j, runs in enumerate(runs_per_string):
        if len(runs):
            g_start.append(gst.starts[j] + runs.start)
            g_len.append(runs.end - runs.start + 1)
            g_per.append(runs.period)
    if g_start:
        starts = np.concatenate(g_start)
        lens = np.concatenate(g_len)
        periods = np.concatenate(g_per)
        loci = gst.materialize_loci(starts, lens)
    else:
        loci = periods = np.empty(0, dtype=np.int64)

    nn = gst.n_nodes
    big = len(gst.data) + 2
    best = np.full(nn, big, dtype=np.int64)
    np.minimum.at(best, loci.astype(np.int64), periods)
    bl = best.tolist()
    parl = gst.parent.tolist()
    for v in gst.topo_descending().tolist():
        p = parl[v]
        if bl[v] < bl[p]:
            bl[p] = bl[v]
    best = np.array(bl, dtype=np.int64)
    cand = 2 * best <= gst.depth
    gst.candidate = cand
    gst.candidate_period = np.where(cand, best, 0).astype(np.int32)
    return cand


def lpcf_weighted_ancestor(q: LpcfQuery) -> LpcfResult:
    """Longest periodic common factor via the augmented-tree route.

    The answer is the deepest node that is both a candidate (spells a
    periodic run prefix) and good (covers at least k' colors); its
    witness is the leftmost occurrence among input strings.
    """
    gst = build_generalized_suffix_tree(join_texts(q.texts))
    mark_candidates(gst, [compute_runs(t) for t in q.texts])
    colors = color_set_size(gst)
    gst.good = colors >= q.k_prime
    win = gst.candidate & gst.good
    if not win.any():
        return LpcfResult(0, 0, None)
    depths = gst.depth.astype(np.int64)
    length = int(depths[win].max())
    at = np.flatnonzero(win & (depths == length))
    min_start = gst.min_start()
    pick = int(at[np.argmin(min_start[at])])
    g = int(min_start[pick])
    witness = LpcfWitness(string=int(gst.origin_id[g]), start=int(gst.origin_pos[g]))
    return LpcfResult(length, int(gst.candidate_period[pick]), witness)


def lpcf_nearest_good_ancestor(q: LpcfQuery, return_trace: bool = False) -> LpcfResult:
    """Longest periodic common factor without tree augmentation.

    For each run, the deepest good ancestor of the run-start leaf bounds
    how much of the run is widely shared: the whole run if it fits,
    otherwise the bound itself provided the period still fits twice.
    The best capped run is the answer.
    """
    gst = build_generalized_suffix_tree(join_texts(q.texts))
    colors = color_set_size(gst)
    good = colors >= q.k_prime
    gst.good = good

    goodl = good.tolist()
    depthl = gst.depth.tolist()
    parl = gst.parent.tolist()
    gd = [0] * gst.n_nodes
    for v in gst.topo_descending().tolist()[::-1]:
        gd[v] = depthl[v] if goodl[v] else gd[parl[v]]
    gd_arr = np.array(gd, dtype=np.int64)

    sid_l, start_l, end_l, per_l, depth_l = [], [], [], [], []
    for j, t in enumerate(q.texts):
        runs = compute_runs(t)
        if len(runs):
            leaves = gst.leaf_of[gst.starts[j] + runs.start]
            sid_l.append(np.full(len(runs), j, dtype=np.int64))
            start_l.append(runs.start)
            end_l.append(runs.end)
            per_l.append(runs.period)
            depth_l.append(gd_arr[leaves])

    if not sid_l:
        return LpcfResult(0, 0, None, trace=[] if return_trace else None)
    sid = np.concatenate(sid_l)
    start = np.concatenate(start_l)
    end = np.concatenate(end_l)
    period = np.concatenate(per_l)
    d = np.concatenate(depth_l)
    runlen = end - start + 1
    contrib = np.where(runlen <= d, runlen, np.where(2 * period <= d, d, 0))

    trace = None
    if return_trace:
        trace = [RunContribution(*map(int, row))
                 for row in zip(sid, start, end, period, d, contrib)]
    length = int(contrib.max())
    if length == 0:
        return LpcfResult(0, 0, None, trace=trace)
    at = np.flatnonzero(contrib == length)
    pick = int(at[np.lexsort((period[at], start[at], sid[at]))[0]])
    witness = LpcfWitness(string=int(sid[pick]), start=int(start[pick]))
    return LpcfResult(length, int(period[pick]), witness, trace=trace)

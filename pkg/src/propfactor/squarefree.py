"""Longest common square-free factor of an indexed text and a query.

Indexing x stores its suffix tree plus, per position, the length of the
longest square-free factor starting there.  A query computes matching
statistics of y against the tree and caps each matched length by the
stored limit at the reported occurrence; the cap is the same for every
occurrence of the matched prefix, so any occurrence works.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .repetitions import (
    compute_runs,
    longest_squarefree_start_array,
    shortest_square_after_array,
    shortest_square_start_array,
)
from .suffix_tree import SuffixTree, build_suffix_tree, matching_statistics
from .text import Text, load_text


class SquarefreeWitness(NamedTuple):
    x_pos: int
    y_pos: int
    length: int


class SqmsIndex:
    """Square-free matching index over one text."""

    def __init__(self, tree: SuffixTree, limits: np.ndarray, text: Text):
        self.tree = tree
        self.limits = limits
        self.text = text

    def __len__(self) -> int:
        return len(self.text)


class SqmsResult:
    """Per query position, the longest common square-free factor starting
    there; plus the best overall and one witness occurrence."""

    def __init__(self, values: np.ndarray, best_length: int,
                 witness: SquarefreeWitness | None):
        self.values = values
        self.best_length = best_length
        self.witness = witness


def build_sqms_index(x) -> SqmsIndex:
    x = load_text(x)
    runs = compute_runs(x)
    at = shortest_square_start_array(x, runs)
    after = shortest_square_after_array(x, runs)
    limits = longest_squarefree_start_array(after, at, len(x))
    return SqmsIndex(tree=build_suffix_tree(x), limits=limits, text=x)


def sqms_query(index: SqmsIndex, y) -> SqmsResult:
    y = load_text(y)
    ms = matching_statistics(index.tree, y)
    values = np.zeros(len(y), dtype=np.int64)
    hit = ms.lengths > 0
    if hit.any():
        values[hit] = np.minimum(ms.lengths[hit], index.limits[ms.positions[hit]])
    best = int(values.max()) if len(values) else 0
    witness = None
    if best > 0:
        j = int(np.argmax(values))
        witness = SquarefreeWitness(x_pos=int(ms.positions[j]), y_pos=j, length=best)
    return SqmsResult(values, best, witness)

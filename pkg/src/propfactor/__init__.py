"""Longest common factors preserved under square-freeness, periodicity,
or palindromicity, over integer alphabets."""

from .cli import run_cli
from .oracle import (
    brute_longest_common_squarefree,
    brute_lpalcf,
    brute_lpcf,
    brute_runs,
)
from .palindromes import (
    Arms,
    LpalcfResult,
    MaximalPalindrome,
    Palindromes,
    PalindromicArm,
    SuffixOrder,
    collect_arms,
    lpalcf,
    max_cross_lcp,
    maximal_palindromes,
)
from .periodic import (
    LpcfQuery,
    LpcfResult,
    LpcfWitness,
    RunContribution,
    lpcf_nearest_good_ancestor,
    lpcf_weighted_ancestor,
    mark_candidates,
)
from .repetitions import (
    Run,
    Runs,
    compute_runs,
    longest_squarefree_start_array,
    shortest_square_after_array,
    shortest_square_start_array,
    smallest_period,
)
from .squarefree import (
    SqmsIndex,
    SqmsResult,
    SquarefreeWitness,
    build_sqms_index,
    sqms_query,
)
from .suffix_tree import (
    MatchingStatistics,
    Node,
    SuffixTree,
    build_generalized_suffix_tree,
    build_suffix_tree,
    color_set_size,
    locus_of_factor,
    matching_statistics,
    weighted_ancestor,
)
from .text import InputError, JoinedText, Text, join_texts, load_text

__version__ = "0.1.0"

__all__ = [
    "InputError", "Text", "JoinedText", "load_text", "join_texts",
    "SuffixTree", "Node", "build_suffix_tree", "build_generalized_suffix_tree",
    "matching_statistics", "MatchingStatistics", "color_set_size",
    "weighted_ancestor", "locus_of_factor",
    "Run", "Runs", "compute_runs", "smallest_period",
    "shortest_square_start_array", "shortest_square_after_array",
    "longest_squarefree_start_array",
    "SqmsIndex", "SqmsResult", "SquarefreeWitness", "build_sqms_index", "sqms_query",
    "LpcfQuery", "LpcfResult", "LpcfWitness", "RunContribution",
    "lpcf_weighted_ancestor", "lpcf_nearest_good_ancestor", "mark_candidates",
    "MaximalPalindrome", "PalindromicArm", "Palindromes", "Arms", "SuffixOrder",
    "maximal_palindromes", "collect_arms", "max_cross_lcp", "lpalcf", "LpalcfResult",
    "brute_runs", "brute_longest_common_squarefree", "brute_lpcf", "brute_lpalcf",
    "run_cli",
    "__version__",
]

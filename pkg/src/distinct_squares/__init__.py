"""Distinct squares of a text in linear time, plus the succinct LPF/PLCP
machinery, Lempel-Ziv factorization, suffix-tree decoration and the MAST
topology built on top of it.

>>> from distinct_squares import analyze
>>> analyze("ababaaababa").squares
[SquareOccurrence(start=5, length=2), SquareOccurrence(start=1, length=4), SquareOccurrence(start=2, length=4)]
"""
from .bitvec import RmqIndex, SuccinctBits, build_rmq, build_select
from .lpf import (
    Factor,
    LzFactorization,
    SuccinctLpf,
    build_lpf_plain,
    build_lpf_succinct,
    lz_factor_at,
    lz_factorize,
)
from .mast import EdgeSplit, LowestMarkedAncestor, MastScan, apply_splits, lma_mark, mast_topology
from .pipeline import Analysis, analyze
from .squares import (
    PositionLists,
    SquareFinder,
    SquareOccurrence,
    all_square_occurrences,
    brute_force_distinct_squares,
    build_position_lists,
    find_distinct_squares,
    recursive_rotate,
    right_rotate,
)
from .suffix import (
    BackwardLce,
    LceIndex,
    PlcpBits,
    SuffixArray,
    build_lce,
    build_lce_backward,
    build_plcp,
    build_suffix_array,
    lce_backward,
    lce_forward,
    lcp_access,
    lcp_values,
)
from .sufftree import (
    DecorationEntry,
    DecorationError,
    SuffixTree,
    build_suffix_tree,
    decorate_with_squares,
    locate_square_by_descent,
)
from .text import SENTINEL, SentinelError, Text, prepare_text, reverse_text

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "BackwardLce",
    "DecorationEntry",
    "DecorationError",
    "EdgeSplit",
    "Factor",
    "LceIndex",
    "LowestMarkedAncestor",
    "LzFactorization",
    "MastScan",
    "PlcpBits",
    "PositionLists",
    "RmqIndex",
    "SENTINEL",
    "SentinelError",
    "SquareFinder",
    "SquareOccurrence",
    "SuccinctBits",
    "SuccinctLpf",
    "SuffixArray",
    "SuffixTree",
    "Text",
    "all_square_occurrences",
    "analyze",
    "apply_splits",
    "brute_force_distinct_squares",
    "build_lce",
    "build_lce_backward",
    "build_lpf_plain",
    "build_lpf_succinct",
    "build_plcp",
    "build_position_lists",
    "build_rmq",
    "build_select",
    "build_suffix_array",
    "build_suffix_tree",
    "decorate_with_squares",
    "find_distinct_squares",
    "lce_backward",
    "lce_forward",
    "lcp_access",
    "lcp_values",
    "lma_mark",
    "locate_square_by_descent",
    "lz_factor_at",
    "lz_factorize",
    "mast_topology",
    "prepare_text",
    "recursive_rotate",
    "reverse_text",
    "right_rotate",
]

"""End-to-end construction of every index needed for the square scan."""
from __future__ import annotations

import gc
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from .bitvec import RmqIndex
from .lpf import LzFactorization, SuccinctLpf, build_lpf_succinct, lz_factorize
from .squares import SquareFinder, SquareOccurrence
from .suffix import (
    BackwardLce,
    LceIndex,
    PlcpBits,
    SuffixArray,
    build_plcp,
    build_suffix_array,
)
from .sufftree import SuffixTree, build_suffix_tree
from .text import RawText, Text, prepare_text


@dataclass
class Analysis:
    text: Text
    sa: SuffixArray
    plcp: PlcpBits
    lce: LceIndex
    lcs: BackwardLce
    tree: SuffixTree
    lpf: SuccinctLpf
    lpf_rmq: RmqIndex
    lz: LzFactorization
    finder: SquareFinder
    squares: list[SquareOccurrence]
    timings: dict[str, float] = field(default_factory=dict)


@contextmanager
def _collector_paused():
    # the indexes hold no reference cycles; generational passes over millions
    # of live objects only add noise to the timings
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def analyze(source: RawText | Text) -> Analysis:
    """Build SA, PLCP, both LCE indexes, the suffix tree, LPF, LZ and squares.

    ``timings`` records wall-clock milliseconds per stage.
    """
    with _collector_paused():
        return _analyze(source)


def _analyze(source: RawText | Text) -> Analysis:
    timings: dict[str, float] = {}
    clock = time.perf_counter()

    def lap(stage: str) -> None:
        nonlocal clock
        now = time.perf_counter()
        timings[stage] = (now - clock) * 1000.0
        clock = now

    t = source if isinstance(source, Text) else prepare_text(source)
    sa = build_suffix_array(t)
    lap("suffix_array")
    plcp = build_plcp(t, sa)
    lap("plcp")
    lce = LceIndex(t, sa, plcp)
    lap("lce")
    lcs = BackwardLce(t)
    lap("lce_backward")
    tree = build_suffix_tree(t, sa, plcp)
    lap("suffix_tree")
    lpf = build_lpf_succinct(t, sa, plcp, tree)
    lap("lpf")
    lpf_rmq = RmqIndex(lpf.decode())
    lz = lz_factorize(lpf)
    lap("lz")
    finder = SquareFinder(t, lz, lpf, lpf_rmq, lce, lcs)
    squares = finder.run()
    lap("squares")
    return Analysis(t, sa, plcp, lce, lcs, tree, lpf, lpf_rmq, lz, finder, squares, timings)

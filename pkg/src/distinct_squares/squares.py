"""Leftmost occurrences of all distinct squares in linear time.

Squares are found by probing at Lempel-Ziv factor borders, one period at a
time.  Every probe hit is right-rotated; a range-minimum index over LPF picks
out the rotations that are leftmost occurrences (``LPF[s] < 2p``), so no
suffix-link walks are needed.
"""
from __future__ import annotations

from array import array
from typing import NamedTuple, Sequence

import numpy as np

from .bitvec import RmqIndex
from .lpf import LzFactorization, SuccinctLpf
from .suffix import BackwardLce, LceIndex
from .text import Text


class SquareOccurrence(NamedTuple):
    start: int
    length: int

    @property
    def period(self) -> int:
        return self.length // 2


class PeriodScanState:
    """Mutable state of one scan.

    ``marks[s] == p`` means ``(s, 2p)`` and all of its right-rotations have
    been dealt with in period ``p``; storing period ids instead of a fresh bit
    vector per period keeps the reset free.
    """

    def __init__(self, n: int, z: int):
        self.marks = array("i", [0]) * (n + 2)
        self.z_skip = [0] * (z + 2)
        self.current_period = 0
        self.reported: list[SquareOccurrence] = []


class SquareFinder:
    """Scan for all distinct squares; keeps counters for inspection.

    :ivar probes: number of border probes (pairs of forward/backward LCE)
    :ivar lce_queries: LCE evaluations, probes and rotations included
    :ivar rotated: occurrences reported from the rotation search
    :ivar resorted_periods: periods whose reports needed reordering by start
    :ivar marked_hits: rotation minima that were already reported this period
    """

    def __init__(
        self,
        t: Text,
        fz: LzFactorization,
        lpf: SuccinctLpf,
        lpf_rmq: RmqIndex,
        lce: LceIndex,
        lcs: BackwardLce,
    ):
        self.text = t
        self.fz = fz
        self.lpf = lpf
        self.lpf_rmq = lpf_rmq
        self.lce = lce
        self.lcs = lcs
        self.state = PeriodScanState(t.n, fz.z)
        self.probes = 0
        self.lce_queries = 0
        self.rotated: set[SquareOccurrence] = set()
        self.resorted_periods = 0
        self.marked_hits = 0

    def right_rotate(self, s: int, p: int) -> None:
        st = self.state
        if st.marks[s] == p:
            return
        if self.lpf.access(s) < 2 * p:
            st.reported.append(SquareOccurrence(s, 2 * p))
        self.lce_queries += 1
        ell = self.lce.extend(s, s + p)
        self.recursive_rotate(s + 1, min(s + p - 1, s + ell - p), p)
        st.marks[s] = p

    def recursive_rotate(self, lo: int, hi: int, p: int) -> None:
        st = self.state
        marks = st.marks
        reported = st.reported
        argmin = self.lpf_rmq.argmin
        lpf_at = self.lpf_rmq.value
        bound = 2 * p
        # explicit stack; left part first keeps the reports in ascending order
        pending = [(lo, hi)]
        while pending:
            lo, hi = pending.pop()
            if lo > hi:
                continue
            m = argmin(lo, hi)
            if lpf_at(m) >= bound:
                continue
            if marks[m] == p:
                # reported earlier in this period, so are its rotations up to hi
                self.marked_hits += 1
                pending.append((lo, m - 1))
                continue
            occ = SquareOccurrence(m, bound)
            reported.append(occ)
            self.rotated.add(occ)
            marks[m] = p
            pending.append((m + 1, hi))
            pending.append((lo, m - 1))

    def run(self) -> list[SquareOccurrence]:
        t = self.text
        n = t.n
        data = t.data
        fz = self.fz
        z = fz.z
        st = self.state
        lce = self.lce.extend
        lcs = self.lcs.extend
        right_rotate = self.right_rotate

        # 1-based factor tables with the dummy factor f_{z+1} = T[n]
        begin = [0] + fz.starts + [n + 1]
        size = [0] + fz.lengths() + [1]
        pair = [0] * (z + 2)
        for x in range(1, z + 1):
            pair[x] = size[x] + size[x + 1]
        pair[z + 1] = n + 2  # stops every skip chase
        longest = max(pair[1:z], default=0)
        skip = st.z_skip

        for p in range(1, longest + 1):
            st.current_period = p
            first = len(st.reported)
            x = 1
            while x <= z:
                if pair[x] < p:
                    y = x
                    chased = []
                    while pair[y] < p:
                        chased.append(y)
                        y = skip[y] if skip[y] else y + 1
                    for c in chased:
                        skip[c] = y
                    if y > z:
                        break
                    x = y
                b0 = begin[x]
                b1 = begin[x + 1]
                # the left-border probe goes first: a square it finds may
                # right-rotate onto one the right-border probe would also hit
                q = b0 + p
                if q <= n:
                    # square starts before f_x, centre inside f_x
                    self.probes += 1
                    if data[b0 - 1] == data[q - 1]:
                        self.lce_queries += 2
                        right = lce(b0, q)
                        left = lcs(b0 - 1, q - 1)
                        if left > 0 and right + left >= p:
                            s = max(b0 - left, b0 - p + 1)
                            if s + p <= b1:
                                right_rotate(s, p)
                if size[x] >= p:
                    # right end of the square inside f_{x+1}
                    q = b1 - p
                    self.probes += 1
                    if b1 <= n and data[b1 - 1] == data[q - 1]:
                        self.lce_queries += 2
                        right = lce(b1, q)
                        left = lcs(b1 - 1, q - 1)
                        if right + left >= p:
                            right_rotate(max(q - left, q - p + 1), p)
                x += 1
            if _sort_tail(st.reported, first):
                self.resorted_periods += 1
        return st.reported


def _sort_tail(reported: list[SquareOccurrence], first: int) -> bool:
    tail = reported[first:]
    if any(tail[i].start > tail[i + 1].start for i in range(len(tail) - 1)):
        tail.sort()
        reported[first:] = tail
        return True
    return False


def find_distinct_squares(
    t: Text,
    fz: LzFactorization | None = None,
    lpf: SuccinctLpf | None = None,
    lpf_rmq: RmqIndex | None = None,
    lce: LceIndex | None = None,
    lcs: BackwardLce | None = None,
) -> list[SquareOccurrence]:
    """Leftmost occurrence of every distinct square, ordered by (length, start).

    Missing indexes are built from ``t``.
    """
    if None in (fz, lpf, lpf_rmq, lce, lcs):
        from .pipeline import analyze

        return analyze(t).squares
    return SquareFinder(t, fz, lpf, lpf_rmq, lce, lcs).run()


def right_rotate(s: int, p: int, finder: SquareFinder) -> None:
    finder.state.current_period = p
    finder.right_rotate(s, p)


def recursive_rotate(lo: int, hi: int, p: int, finder: SquareFinder) -> None:
    finder.state.current_period = p
    finder.recursive_rotate(lo, hi, p)


def _square_starts(codes: np.ndarray, p: int) -> np.ndarray:
    """0-based starts of all squares of period ``p``."""
    eq = codes[:-p] == codes[p:]
    if eq.size < p:
        return np.empty(0, dtype=np.int64)
    run = np.concatenate(([0], np.cumsum(eq, dtype=np.int64)))
    return np.flatnonzero(run[p:] - run[:-p] == p)


def all_square_occurrences(t: Text) -> list[SquareOccurrence]:
    """Every occurrence of every square (quadratic output; small inputs)."""
    codes = np.frombuffer(t.data, dtype=np.uint8)
    out = []
    for p in range(1, t.n // 2 + 1):
        out.extend(SquareOccurrence(int(s) + 1, 2 * p) for s in _square_starts(codes, p))
    return out


def brute_force_distinct_squares(t: Text) -> list[SquareOccurrence]:
    """Reference enumeration: leftmost occurrence per distinct square content."""
    codes = np.frombuffer(t.data, dtype=np.uint8)
    data = t.data
    out = []
    for p in range(1, t.n // 2 + 1):
        seen = set()
        for s in _square_starts(codes, p).tolist():
            piece = data[s : s + 2 * p]
            if piece not in seen:
                seen.add(piece)
                out.append(SquareOccurrence(s + 1, 2 * p))
    return out


class PositionLists:
    """Per-position lists of square lengths, longest first, in one pooled array.

    List ``i`` is ``pool[head[i] : head[i] + count[i]]``.
    """

    def __init__(self, squares: Sequence[SquareOccurrence], n: int):
        count = array("i", [0]) * (n + 1)
        for start, _ in squares:
            count[start] += 1
        head = array("i", [0]) * (n + 1)
        total = 0
        for i in range(1, n + 1):
            head[i] = total
            total += count[i]
        pool = array("i", [0]) * total
        # front insertion of ascending lengths: fill each segment from its end
        cursor = array("i", [0]) * (n + 1)
        for i in range(1, n + 1):
            cursor[i] = head[i] + count[i]
        for start, length in squares:
            cursor[start] -= 1
            pool[cursor[start]] = length
        self.n = n
        self.pool = pool
        self.head = head
        self.count = count

    def __getitem__(self, i: int) -> list[int]:
        h = self.head[i]
        return list(self.pool[h : h + self.count[i]])

    def as_lists(self) -> list[list[int]]:
        return [self[i] for i in range(1, self.n + 1)]


def build_position_lists(squares: Sequence[SquareOccurrence], n: int) -> PositionLists:
    return PositionLists(squares, n)

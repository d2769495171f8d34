"""Longest-previous-factor array and the Lempel-Ziv factorization.

``LPF[j]`` is the length of the longest prefix of ``T[j..n]`` that also
starts at some position before ``j``.  Since ``LPF[j] + j`` never decreases,
the array fits in a ``2n``-bit unary stream exactly like PLCP.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .bitvec import SuccinctBits
from .suffix import PlcpBits, SuffixArray, lcp_values
from .sufftree import NONE, SuffixTree, build_suffix_tree
from .text import Text


def build_lpf_plain(sa: SuffixArray, plcp: PlcpBits) -> list[int]:
    """LPF as a plain list (index 0 is position 1), from SA and LCP.

    Stack sweep over the suffix array: a suffix popped by a smaller text
    position takes the larger of its two neighbouring LCP values.
    """
    n = sa.n
    starts = sa.array.tolist()
    lcp = [0] + lcp_values(plcp, sa).tolist() + [0]
    starts.append(0)  # rank n+1 flushes the stack
    lpf = [0] * (n + 1)
    stack = [1]
    for i in range(2, n + 2):
        si = starts[i]
        while stack:
            top = stack[-1]
            st = starts[top]
            if si < st:
                lpf[st] = max(lcp[top], lcp[i])
                lcp[i] = min(lcp[top], lcp[i])
            elif lcp[i] <= lcp[top]:
                lpf[st] = lcp[top]
            else:
                break
            stack.pop()
        if i <= n:
            stack.append(i)
    return lpf[1:]


class SuccinctLpf:
    """LPF in unary-increment form: ``LPF[j] = select1(j) - 2j``."""

    def __init__(self, bits: SuccinctBits, n: int):
        self.bits = bits
        self.n = n

    def access(self, j: int) -> int:
        return self.bits.select1(j) - 2 * j

    __getitem__ = access

    def decode(self) -> np.ndarray:
        """All values at once (index 0 is position 1)."""
        return self.bits.one_positions() - 2 * np.arange(1, self.n + 1)

    def to_list(self) -> list[int]:
        return self.decode().tolist()


def build_lpf_succinct(
    t: Text, sa: SuffixArray, plcp: PlcpBits, tree: SuffixTree | None = None
) -> SuccinctLpf:
    """Single text-order pass over the suffix tree.

    For each leaf ``j`` we climb until the root or the first node already
    visited by an earlier leaf; the depth of that node is ``LPF[j]``.  Every
    value goes straight into the unary stream.
    """
    if tree is None:
        tree = build_suffix_tree(t, sa, plcp)
    n = t.n
    parent = tree.parent
    depth = tree.depth
    leaf_of = tree.leaf_of
    root = tree.root
    visited = bytearray(len(tree))
    out = bytearray(2 * n)
    for j in range(1, n + 1):
        v = parent[leaf_of[j]]
        while v != root and not visited[v]:
            visited[v] = 1
            v = parent[v]
        value = depth[v] if v != root else 0
        out[value + 2 * j - 1] = 1
    return SuccinctLpf(SuccinctBits(out), n)


class Factor(NamedTuple):
    start: int
    length: int


class LzFactorization:
    """Greedy LZ77 factorization; factor ``x`` has length ``max(1, LPF[start])``."""

    def __init__(self, starts: list[int], n: int):
        self.n = n
        self.starts = starts
        self.z = len(starts)
        marks = bytearray(n)
        for s in starts:
            marks[s - 1] = 1
        self.boundary_bits = SuccinctBits(marks)

    def __len__(self) -> int:
        return self.z

    def factor_at(self, x: int) -> Factor:
        """Start and length of factor ``x`` via select on the boundary bits."""
        if not 1 <= x <= self.z:
            raise IndexError(f"factor {x} outside 1..{self.z}")
        start = self.boundary_bits.select1(x)
        end = self.boundary_bits.select1(x + 1) if x < self.z else self.n + 1
        return Factor(start, end - start)

    def lengths(self) -> list[int]:
        ends = self.starts[1:] + [self.n + 1]
        return [e - s for s, e in zip(self.starts, ends)]

    def factors(self, t: Text) -> list[bytes]:
        return [t.substring(s, l) for s, l in zip(self.starts, self.lengths())]


def lz_factorize(lpf: SuccinctLpf) -> LzFactorization:
    starts = []
    k = 1
    while k <= lpf.n:
        starts.append(k)
        k += max(1, lpf.access(k))
    return LzFactorization(starts, lpf.n)


def lz_factor_at(fz: LzFactorization, x: int) -> Factor:
    return fz.factor_at(x)

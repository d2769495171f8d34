"""Suffix array, PLCP in unary bit-vector form, and LCE indexes.

Arrays indexed by rank or by text position are stored with an unused slot 0
so that position ``i`` lives at index ``i``.
"""
from __future__ import annotations

import numpy as np

from .bitvec import RmqIndex, SuccinctBits
from .text import Text, reverse_text


def _int_view(arr: np.ndarray) -> memoryview:
    arr = np.ascontiguousarray(arr, dtype=np.int32 if arr.size < 2**31 else np.int64)
    return memoryview(arr).cast("B").cast("i" if arr.dtype == np.int32 else "q")


def _prefix_doubling(data: bytes) -> np.ndarray:
    """0-based suffix array by rank doubling; relies on the unique sentinel."""
    n = len(data)
    rank = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    k = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:] + 1
        key = rank * (int(rank.max()) + 2) + second
        sa = np.argsort(key, kind="stable")
        ordered = key[sa]
        fresh = np.empty(n, dtype=np.int64)
        fresh[0] = 0
        np.cumsum(ordered[1:] != ordered[:-1], out=fresh[1:])
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = fresh
        if fresh[-1] == n - 1:
            return sa
        k *= 2


class SuffixArray:
    """Suffix array and its inverse, 1-based on both sides.

    ``sa[i]`` is the start of the ``i``-th smallest suffix and
    ``isa[sa[i]] == i``.
    """

    def __init__(self, starts: np.ndarray):
        n = int(starts.size)
        self.n = n
        sa = np.zeros(n + 1, dtype=np.int64)
        sa[1:] = starts + 1
        isa = np.zeros(n + 1, dtype=np.int64)
        isa[sa[1:]] = np.arange(1, n + 1)
        self.array = sa
        self.inverse_array = isa
        self.sa = _int_view(sa)
        self.isa = _int_view(isa)

    def __len__(self) -> int:
        return self.n

    def to_list(self) -> list[int]:
        return self.array[1:].tolist()

    def inverse_list(self) -> list[int]:
        return self.inverse_array[1:].tolist()


def build_suffix_array(t: Text) -> SuffixArray:
    return SuffixArray(_prefix_doubling(t.data))


class PlcpBits:
    """PLCP stored as unary increments: ``PLCP[i] = select1(i) - 2i``.

    The first code carries one extra ``0`` so that the formula holds with
    1-based bit positions; the vector then has length exactly ``2n``.
    """

    def __init__(self, bits: SuccinctBits, n: int):
        self.bits = bits
        self.n = n

    def __getitem__(self, i: int) -> int:
        return self.bits.select1(i) - 2 * i

    def decode(self) -> np.ndarray:
        """All PLCP values at once (index 0 is position 1)."""
        return self.bits.one_positions() - 2 * np.arange(1, self.n + 1)


def build_plcp(t: Text, sa: SuffixArray) -> PlcpBits:
    """Phi-algorithm pass in text order, writing the unary stream directly."""
    n = t.n
    data = t.data
    phi_arr = np.zeros(n + 1, dtype=np.int64)
    phi_arr[sa.array[2:]] = sa.array[1:-1]
    phi = _int_view(phi_arr)
    out = bytearray(2 * n)
    l = 0
    for i in range(1, n + 1):
        j = phi[i]
        if j == 0:
            l = 0
        else:
            # the unique sentinel stops the scan inside the text
            while data[i - 1 + l] == data[j - 1 + l]:
                l += 1
        out[l + 2 * i - 1] = 1
        if l:
            l -= 1
    return PlcpBits(SuccinctBits(out), n)


def lcp_access(plcp: PlcpBits, sa: SuffixArray, i: int) -> int:
    """``LCP[i]`` for rank ``i``; ``LCP[1]`` is 0."""
    if not 1 <= i <= sa.n:
        raise IndexError(f"rank {i} outside 1..{sa.n}")
    p = sa.sa[i]
    return plcp.bits.select1(p) - 2 * p


def lcp_values(plcp: PlcpBits, sa: SuffixArray) -> np.ndarray:
    """The LCP array in rank order (index 0 is rank 1), decoded in one pass."""
    return plcp.decode()[sa.array[1:] - 1]


class LceIndex:
    """Forward longest-common-extension queries on one text."""

    def __init__(self, t: Text, sa: SuffixArray, plcp: PlcpBits):
        self.text = t
        self.n = t.n
        self.sa = sa
        self.plcp = plcp
        self.isa = sa.isa
        self.rmq = RmqIndex(lcp_values(plcp, sa))

    def lcp(self, i: int) -> int:
        return self.rmq.value(i)

    def lce(self, s: int, u: int) -> int:
        if not (1 <= s <= self.n and 1 <= u <= self.n):
            raise IndexError(f"positions ({s}, {u}) outside 1..{self.n}")
        return self.extend(s, u)

    def extend(self, s: int, u: int) -> int:
        # unchecked variant for inner loops
        if s == u:
            return self.n - s + 1
        a = self.isa[s]
        b = self.isa[u]
        if a > b:
            a, b = b, a
        return self.rmq.min_value(a + 1, b)


def build_lce(t: Text) -> LceIndex:
    sa = build_suffix_array(t)
    return LceIndex(t, sa, build_plcp(t, sa))


def lce_forward(idx: LceIndex, s: int, u: int) -> int:
    return idx.lce(s, u)


class BackwardLce:
    """Longest common suffix of prefixes ``t[1..s]`` and ``t[1..u]``.

    Backed by an :class:`LceIndex` over the reversed text, where text
    position ``i`` maps to ``n - i``.
    """

    def __init__(self, t: Text):
        self.n = t.n
        self.forward = build_lce(reverse_text(t))

    def lcs(self, s: int, u: int) -> int:
        if not (0 <= s <= self.n - 1 and 0 <= u <= self.n - 1):
            raise IndexError(f"prefix ends ({s}, {u}) outside 0..{self.n - 1}")
        return self.extend(s, u)

    def extend(self, s: int, u: int) -> int:
        if s == 0 or u == 0:
            return 0
        if s == u:
            return s
        return self.forward.extend(self.n - s, self.n - u)


def build_lce_backward(t: Text) -> BackwardLce:
    return BackwardLce(t)


def lce_backward(idx: BackwardLce, s: int, u: int) -> int:
    return idx.lcs(s, u)

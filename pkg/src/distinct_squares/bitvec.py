"""Bit vectors with select support and range-minimum queries.

Both structures are immutable once built and use 1-based positions.
"""
from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence, Union

import numpy as np

BitSource = Union[np.ndarray, bytes, bytearray, Iterable[int]]

_POPCOUNT = [bin(b).count("1") for b in range(256)]
# _SELECT_IN_BYTE[b][k] is the offset of the (k+1)-th set bit of byte b
_SELECT_IN_BYTE = [[o for o in range(8) if b >> o & 1] for b in range(256)]


class SuccinctBits:
    """Static bit vector answering ``select1`` through a per-word directory.

    The bits are packed into 64-bit words.  For every word the directory
    keeps the number of 1-bits up to and including it; a select query does
    one binary search over the directory and a byte-wise scan inside the
    selected word.
    """

    def __init__(self, bits: BitSource):
        if isinstance(bits, (bytes, bytearray)):
            flags = np.frombuffer(bytes(bits), dtype=np.uint8) != 0
        else:
            flags = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits) != 0
        self.length = int(flags.size)
        packed = np.packbits(flags, bitorder="little")
        pad = (-packed.size) % 8
        if pad:
            packed = np.concatenate([packed, np.zeros(pad, dtype=np.uint8)])
        words = packed.view("<u8")
        self._words = memoryview(words.astype(np.uint64)).cast("B").cast("Q")
        counts = np.cumsum(np.bitwise_count(words), dtype=np.int64)
        self._cumulative = counts.tolist()
        self.ones = int(counts[-1]) if counts.size else 0

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(f"bit {i} outside 1..{self.length}")
        i -= 1
        return self._words[i >> 6] >> (i & 63) & 1

    def select1(self, i: int) -> int:
        """Position of the ``i``-th 1-bit.

        :raises IndexError: unless ``1 <= i <= self.ones``
        """
        if not 1 <= i <= self.ones:
            raise IndexError(f"select1({i}) undefined for {self.ones} set bits")
        w = bisect_left(self._cumulative, i)
        rank = i - (self._cumulative[w - 1] if w else 0)
        word = self._words[w]
        base = w << 6
        while True:
            byte = word & 0xFF
            c = _POPCOUNT[byte]
            if rank <= c:
                return base + _SELECT_IN_BYTE[byte][rank - 1] + 1
            rank -= c
            word >>= 8
            base += 8

    def one_positions(self) -> np.ndarray:
        """Positions of all 1-bits in increasing order (vectorised select)."""
        raw = np.frombuffer(self._words.cast("B"), dtype=np.uint8)
        flags = np.unpackbits(raw, bitorder="little")[: self.length]
        return np.flatnonzero(flags).astype(np.int64) + 1

    def to_string(self) -> str:
        return "".join(str(self[i]) for i in range(1, self.length + 1))


def build_select(bits: BitSource) -> SuccinctBits:
    return SuccinctBits(bits)


class RmqIndex:
    """Sparse-table range-minimum index; ties resolve to the leftmost position.

    ``source`` is given as a plain sequence whose first element is position 1.
    The source values stay accessible through :meth:`value`, so an index over
    LCP doubles as the LCP store for LCE queries.
    """

    def __init__(self, source: Union[Sequence[int], np.ndarray]):
        values = np.asarray(source, dtype=np.int64)
        self.n = int(values.size)
        dtype = np.int32 if self.n < 2**31 - 1 and (self.n == 0 or values.max() < 2**31) else np.int64
        src = np.concatenate([np.zeros(1, dtype=dtype), values.astype(dtype)])
        m = self.n + 1
        level = np.arange(m, dtype=np.int32 if m < 2**31 else np.int64)
        levels = [level]
        k = 1
        while (1 << k) <= self.n:
            half = 1 << (k - 1)
            width = m - (1 << k) + 1
            a = level[:width]
            b = level[half : half + width]
            level = np.where(src[a] <= src[b], a, b)
            levels.append(level)
            k += 1
        fmt = "i" if level.dtype == np.int32 else "q"
        self._levels = [memoryview(np.ascontiguousarray(lv)).cast("B").cast(fmt) for lv in levels]
        self._src = memoryview(src).cast("B").cast("i" if dtype == np.int32 else "q")

    def __len__(self) -> int:
        return self.n

    def value(self, i: int) -> int:
        return self._src[i]

    def query(self, l: int, r: int) -> int:
        """Leftmost position of a minimum of ``source[l..r]``.

        :raises ValueError: on an empty or out-of-bounds range
        """
        if not 1 <= l <= r <= self.n:
            raise ValueError(f"invalid range [{l}..{r}] for length {self.n}")
        return self.argmin(l, r)

    def argmin(self, l: int, r: int) -> int:
        # unchecked variant for inner loops
        k = (r - l + 1).bit_length() - 1
        table = self._levels[k]
        a = table[l]
        b = table[r - (1 << k) + 1]
        src = self._src
        return a if src[a] <= src[b] else b

    def min_value(self, l: int, r: int) -> int:
        return self._src[self.argmin(l, r)]


def build_rmq(source: Union[Sequence[int], np.ndarray]) -> RmqIndex:
    return RmqIndex(source)

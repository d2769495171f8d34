"""Sentinel-terminated texts over a byte alphabet.

Positions are 1-based: ``t[1]`` is the first symbol and ``t[t.n]`` is the
sentinel.
"""
from __future__ import annotations

from typing import Iterable, Union

SENTINEL = 0

RawText = Union[bytes, bytearray, memoryview, str, Iterable[int]]


class SentinelError(ValueError):
    """Raised when raw input already contains the sentinel byte."""


class Text:
    """Immutable text whose last symbol is the unique sentinel ``0``."""

    __slots__ = ("data", "n", "sigma")

    def __init__(self, data: bytes):
        if not data or data[-1] != SENTINEL or data.count(SENTINEL) != 1:
            raise SentinelError("text must end with exactly one sentinel byte")
        self.data = bytes(data)
        self.n = len(self.data)
        self.sigma = len(set(self.data))

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside 1..{self.n}")
        return self.data[i - 1]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Text) and other.data == self.data

    def __hash__(self) -> int:
        return hash(self.data)

    def substring(self, start: int, length: int) -> bytes:
        """Symbols ``t[start .. start+length-1]``."""
        return self.data[start - 1 : start - 1 + length]

    @property
    def body(self) -> bytes:
        """The text without its sentinel."""
        return self.data[:-1]

    def __str__(self) -> str:
        return self.body.decode("latin-1") + "$"

    def __repr__(self) -> str:
        return f"Text({str(self)!r})"


def _as_bytes(raw: RawText) -> bytes:
    if isinstance(raw, str):
        return raw.encode("utf-8")
    if isinstance(raw, (bytes, bytearray, memoryview)):
        return bytes(raw)
    return bytes(list(raw))


def prepare_text(raw: RawText) -> Text:
    """Append the sentinel to ``raw``.

    :raises SentinelError: if ``raw`` contains a zero byte
    """
    body = _as_bytes(raw)
    if SENTINEL in body:
        raise SentinelError(
            f"input contains the sentinel byte at offset {body.index(SENTINEL)}"
        )
    return Text(body + bytes([SENTINEL]))


def reverse_text(t: Text) -> Text:
    """Return ``t[n-1] ... t[1]`` followed by the sentinel."""
    return Text(t.body[::-1] + bytes([SENTINEL]))

"""Tree topology of the minimal augmented suffix tree (MAST).

The MAST refines the suffix tree so that the root ``S`` of every square
``SS`` is the string label of a node.  Squares are processed by increasing
length; a lowest-marked-ancestor structure remembers how far down the tree
has already been explored, so each node is marked at most once.
"""
from __future__ import annotations

from array import array
from typing import NamedTuple, Sequence

from .sufftree import NONE, DecorationEntry, SuffixTree


class LowestMarkedAncestor:
    """Nearest marked ancestor-or-self under top-down marking.

    A node may only be marked once its parent is marked, so the marked nodes
    always form a subtree containing the root.  Each subtree is a contiguous
    range of post-order positions; marking writes the node onto the
    canonical cover of its range in a bottom-up segment tree, and a query
    takes the deepest node found on the way from its leaf slot to the top.
    Both operations cost ``O(log n)`` and never degrade on deep trees.
    """

    def __init__(self, tree: SuffixTree):
        self.tree = tree
        size = len(tree)
        self.marked = bytearray(size)
        pos = array("i", [0]) * size
        span = array("i", [1]) * size
        parent = tree.parent
        for i, v in enumerate(tree.post_order()):
            pos[v] = i
            p = parent[v]
            if p != NONE:
                span[p] += span[v]
        self.pos = pos
        self.span = span
        self.width = size
        self.cover = array("i", [NONE]) * (2 * size)
        self.marks = 0
        self.mark(tree.root)

    def mark(self, v: int) -> None:
        if self.marked[v]:
            return
        p = self.tree.parent[v]
        if p != NONE and not self.marked[p]:
            raise ValueError(f"node {v} marked before its parent {p}")
        self.marked[v] = 1
        self.marks += 1
        # a newly marked node is deeper than every marked node covering its range
        cover = self.cover
        lo = self.pos[v] - self.span[v] + 1 + self.width
        hi = self.pos[v] + 1 + self.width
        while lo < hi:
            if lo & 1:
                cover[lo] = v
                lo += 1
            if hi & 1:
                hi -= 1
                cover[hi] = v
            lo >>= 1
            hi >>= 1

    def query(self, v: int) -> int:
        depth = self.tree.depth
        cover = self.cover
        best = self.tree.root
        i = self.pos[v] + self.width
        while i:
            c = cover[i]
            if c != NONE and depth[c] > depth[best]:
                best = c
            i >>= 1
        return best


def lma_mark(s: LowestMarkedAncestor, v: int) -> None:
    s.mark(v)


class EdgeSplit(NamedTuple):
    """New node ``suffix_len`` symbols above ``node`` on its parent edge."""

    node: int
    suffix_len: int


class MastScan:
    """Locate all square roots; ``visits`` counts node visits while marking."""

    def __init__(self, tree: SuffixTree):
        self.tree = tree
        self.lma = LowestMarkedAncestor(tree)
        self.visits = 0

    def run(self, decorations: Sequence[DecorationEntry]) -> list[EdgeSplit]:
        tree = self.tree
        depth = tree.depth
        lma = self.lma
        marked = lma.marked
        splits: list[EdgeSplit] = []
        seen = set()
        for v, ell in _by_length(decorations):
            assert ell % 2 == 0, f"odd square length {ell}"
            half = ell // 2
            self.visits += 1
            u = lma.query(v)
            if depth[u] < half:
                # u sits on the frontier: nothing below it is marked yet
                pending = [u]
                while pending:
                    x = pending.pop()
                    for c in tree.children(x):
                        if marked[c]:
                            raise AssertionError(f"node {c} below frontier node {u} already marked")
                        lma.mark(c)
                        self.visits += 1
                        if depth[c] < half:
                            pending.append(c)
                u = lma.query(v)
            w = u
            if depth[w] > half and (w, half) not in seen:
                seen.add((w, half))
                splits.append(EdgeSplit(w, depth[w] - half))
        return splits


def _by_length(decorations: Sequence[DecorationEntry]) -> list[DecorationEntry]:
    """Stable counting sort on the square length."""
    if not decorations:
        return []
    buckets: list[list[DecorationEntry]] = [[] for _ in range(max(e.length for e in decorations) + 1)]
    for entry in decorations:
        buckets[entry.length].append(entry)
    return [entry for bucket in buckets for entry in bucket]


def mast_topology(tree: SuffixTree, decorations: Sequence[DecorationEntry]) -> list[EdgeSplit]:
    return MastScan(tree).run(decorations)


def apply_splits(tree: SuffixTree, splits: Sequence[EdgeSplit]) -> SuffixTree:
    """Copy of ``tree`` with a new node inserted for every split.

    Splits sharing an edge are applied deepest first so the chain comes out
    ordered by depth; existing node ids are kept.
    """
    out = tree.copy()
    targets = sorted(
        ((s.node, tree.depth[s.node] - s.suffix_len) for s in splits),
        key=lambda item: (item[0], -item[1]),
    )
    for v, new_depth in targets:
        # a deeper split on the same edge already sits between v and its parent
        while out.depth[out.parent[v]] >= new_depth:
            v = out.parent[v]
        out.split_edge(v, new_depth)
    return out

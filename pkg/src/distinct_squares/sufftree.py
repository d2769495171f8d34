"""Suffix trees built from SA + LCP, and their decoration with squares.

Nodes are integer ids; the root is 0.  Children of a node are kept in a
singly linked sibling list ordered by the first symbol of their edge label.
"""
from __future__ import annotations

from array import array
from typing import Iterator, NamedTuple

from .suffix import PlcpBits, SuffixArray, lcp_values
from .text import Text

NONE = -1


class SuffixTree:
    """Compacted trie of all suffixes of a text."""

    def __init__(self, text: Text):
        self.text = text
        self.n = text.n
        self.root = 0
        self.parent = array("i", [NONE])
        self.depth = array("i", [0])
        self.label = array("i", [0])
        self.first_child = array("i", [NONE])
        self.next_sibling = array("i", [NONE])
        self.min_label = array("i", [0])
        self.leaf_of = array("i", [NONE]) * (self.n + 1)
        self._post_order: array | None = None

    def __len__(self) -> int:
        return len(self.depth)

    @property
    def node_count(self) -> int:
        return len(self.depth)

    def _new_node(self, depth: int, label: int = 0) -> int:
        v = len(self.depth)
        self.parent.append(NONE)
        self.depth.append(depth)
        self.label.append(label)
        self.first_child.append(NONE)
        self.next_sibling.append(NONE)
        self.min_label.append(label if label else self.n + 1)
        if label:
            self.leaf_of[label] = v
        return v

    def is_leaf(self, v: int) -> bool:
        return self.label[v] != 0

    def children(self, v: int) -> Iterator[int]:
        c = self.first_child[v]
        while c != NONE:
            yield c
            c = self.next_sibling[c]

    def leaves(self) -> list[int]:
        return [v for v in range(len(self)) if self.label[v]]

    def internal_nodes(self) -> list[int]:
        return [v for v in range(len(self)) if not self.label[v]]

    def post_order(self) -> array:
        """Node ids with every node after all of its descendants."""
        if self._post_order is None:
            order = array("i")
            stack = [(self.root, False)]
            while stack:
                v, expanded = stack.pop()
                if expanded:
                    order.append(v)
                    continue
                stack.append((v, True))
                stack.extend((c, False) for c in reversed(list(self.children(v))))
            self._post_order = order
        return self._post_order

    def string_label(self, v: int) -> bytes:
        return self.text.substring(self.min_label[v], self.depth[v])

    def edge_label(self, v: int) -> bytes:
        up = self.depth[self.parent[v]] if v != self.root else 0
        return self.text.substring(self.min_label[v] + up, self.depth[v] - up)

    def find_child(self, v: int, symbol: int) -> int:
        d = self.depth[v]
        for c in self.children(v):
            if self.text.data[self.min_label[c] - 1 + d] == symbol:
                return c
        return NONE

    def copy(self) -> "SuffixTree":
        clone = SuffixTree.__new__(SuffixTree)
        clone.text = self.text
        clone.n = self.n
        clone.root = self.root
        for name in ("parent", "depth", "label", "first_child", "next_sibling", "min_label", "leaf_of"):
            setattr(clone, name, array("i", getattr(self, name)))
        clone._post_order = None
        return clone

    def split_edge(self, v: int, new_depth: int) -> int:
        """Insert a node at string depth ``new_depth`` on the edge above ``v``."""
        u = self.parent[v]
        if not self.depth[u] < new_depth < self.depth[v]:
            raise ValueError(
                f"depth {new_depth} not strictly inside edge ({self.depth[u]}, {self.depth[v]}]"
            )
        w = self._new_node(new_depth)
        self.min_label[w] = self.min_label[v]
        self.parent[w] = u
        if self.first_child[u] == v:
            self.first_child[u] = w
        else:
            c = self.first_child[u]
            while self.next_sibling[c] != v:
                c = self.next_sibling[c]
            self.next_sibling[c] = w
        self.next_sibling[w] = self.next_sibling[v]
        self.next_sibling[v] = NONE
        self.first_child[w] = v
        self.parent[v] = w
        self._post_order = None
        return w

    def to_dot(self, annotations: dict[int, str] | None = None) -> str:
        annotations = annotations or {}
        lines = ["digraph suffix_tree {", "  node [shape=circle, fontsize=10];"]
        for v in range(len(self)):
            text = f"{self.label[v]}" if self.label[v] else f"{v}:{self.depth[v]}"
            extra = annotations.get(v)
            if extra:
                lines.append(f'  n{v} [label="{text}\\n{extra}", style=filled, fillcolor=lightgray];')
            else:
                shape = "box" if self.label[v] else "circle"
                lines.append(f'  n{v} [label="{text}", shape={shape}];')
        for v in range(len(self)):
            if v == self.root:
                continue
            edge = _printable(self.edge_label(v))
            lines.append(f'  n{self.parent[v]} -> n{v} [label="{edge}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _printable(symbols: bytes) -> str:
    out = []
    for b in symbols:
        if b == 0:
            out.append("$")
        elif 32 <= b < 127 and chr(b) not in '"\\':
            out.append(chr(b))
        else:
            out.append(f"\\\\x{b:02x}")
    return "".join(out)


def build_suffix_tree(t: Text, sa: SuffixArray, plcp: PlcpBits) -> SuffixTree:
    """One left-to-right stack pass over SA and LCP.

    Nodes are popped in post-order, which is recorded for later bottom-up
    passes; ``tails`` runs parallel to the stack and holds the last child
    attached to each open node.
    """
    tree = SuffixTree(t)
    n = t.n
    cap = 2 * n + 1
    for name, fill in (("parent", NONE), ("depth", 0), ("label", 0), ("first_child", NONE), ("next_sibling", NONE)):
        getattr(tree, name).extend(array("i", [fill]) * (cap - 1))
    lcp = lcp_values(plcp, sa).tolist()
    starts = sa.sa
    depth = tree.depth
    parent = tree.parent
    label = tree.label
    first_child = tree.first_child
    next_sibling = tree.next_sibling
    leaf_of = tree.leaf_of
    post = array("i")
    size = 1

    stack = [tree.root]
    tails = [NONE]
    for i in range(1, n + 1):
        l = lcp[i - 1]
        while depth[stack[-1]] > l:
            last = stack.pop()
            tails.pop()
            post.append(last)
            if depth[stack[-1]] < l:
                w = size
                size += 1
                depth[w] = l
                parent[last] = w
                first_child[w] = last
                stack.append(w)
                tails.append(last)
            else:
                top = stack[-1]
                parent[last] = top
                prev = tails[-1]
                if prev == NONE:
                    first_child[top] = last
                else:
                    next_sibling[prev] = last
                tails[-1] = last
        s = starts[i]
        leaf = size
        size += 1
        depth[leaf] = n - s + 1
        label[leaf] = s
        leaf_of[s] = leaf
        stack.append(leaf)
        tails.append(NONE)
    while len(stack) > 1:
        last = stack.pop()
        tails.pop()
        post.append(last)
        top = stack[-1]
        parent[last] = top
        prev = tails[-1]
        if prev == NONE:
            first_child[top] = last
        else:
            next_sibling[prev] = last
        tails[-1] = last
    post.append(tree.root)

    for name in ("parent", "depth", "label", "first_child", "next_sibling"):
        del getattr(tree, name)[size:]
    tree._post_order = post
    min_label = array("i", [n + 1]) * size
    for v in post:
        if label[v]:
            min_label[v] = label[v]
        p = parent[v]
        if p != NONE and min_label[v] < min_label[p]:
            min_label[p] = min_label[v]
    tree.min_label = min_label
    return tree


class DecorationEntry(NamedTuple):
    node: int
    length: int


class DecorationError(AssertionError):
    """A list was dropped while still holding squares."""


def decorate_with_squares(tree: SuffixTree, lists) -> list[DecorationEntry]:
    """Attach every square to the highest node whose label has it as prefix.

    ``lists`` is a :class:`~distinct_squares.squares.PositionLists` (or any
    object with ``pool``, ``head`` and ``count`` arrays) holding, per start
    position, square lengths in descending order.  Each node inherits the list
    of its child containing the smallest leaf label; all other lists must be
    empty by then.
    """
    pool = lists.pool
    head = array("i", [0]) * len(tree)
    count = array("i", [0]) * len(tree)
    depth = tree.depth
    parent = tree.parent
    min_label = tree.min_label
    label = tree.label
    entries: list[DecorationEntry] = []
    for v in tree.post_order():
        if label[v]:
            head[v] = lists.head[label[v]]
            count[v] = lists.count[label[v]]
        if v == tree.root:
            if count[v]:
                raise DecorationError(f"{count[v]} squares left over at the root")
            break
        upper = depth[parent[v]]
        h = head[v]
        c = count[v]
        while c and pool[h] > upper:
            if pool[h] > depth[v]:
                raise DecorationError(f"square of length {pool[h]} overshoots node {v}")
            entries.append(DecorationEntry(v, pool[h]))
            h += 1
            c -= 1
        p = parent[v]
        if min_label[v] == min_label[p]:
            head[p] = h
            count[p] = c
        elif c:
            raise DecorationError(
                f"node {v} drops {c} undecorated squares (first length {pool[h]})"
            )
    return entries


def locate_square_by_descent(tree: SuffixTree, t: Text, s: int, ell: int) -> int:
    """Highest node whose string label has ``t[s..s+ell-1]`` as a prefix."""
    v = tree.root
    data = t.data
    while tree.depth[v] < ell:
        c = tree.find_child(v, data[s - 1 + tree.depth[v]])
        if c == NONE:
            raise LookupError(f"descent for ({s}, {ell}) fell off at node {v}")
        lo = tree.depth[v]
        hi = min(tree.depth[c], ell)
        m = tree.min_label[c]
        if data[m - 1 + lo : m - 1 + hi] != data[s - 1 + lo : s - 1 + hi]:
            raise LookupError(f"edge mismatch descending for ({s}, {ell}) below node {v}")
        v = c
    return v

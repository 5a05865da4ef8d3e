"""Bijection between trapezoidal words and plane oriented recursive trees.

A PORT with m nodes has 2m - 1 places where node m + 1 may be attached.
They are numbered by an interleaved preorder: a node contributes its
leftmost gap, then for each child in planar order the child's gaps followed
by the gap just right of that child.  For the tree ``1(3(4),2(5))`` this
gives

    (1,0) (3,0) (4,0) (3,1) (1,1) (2,0) (5,0) (2,1) (1,2)

A word x_1..x_n builds the tree with n + 1 nodes by attaching node i + 1
at gap x_i.
"""
from __future__ import annotations

from .core import GapSlot, Port, TrapezoidalWord, ValidationError

Adjacency = dict[int, list[int]]


def _adjacency(t: Port) -> Adjacency:
    adj: Adjacency = {}
    stack = [t]
    while stack:
        node = stack.pop()
        adj[node.label] = [c.label for c in node.children]
        stack.extend(node.children)
    return adj


def _build(adj: Adjacency, label: int = 1) -> Port:
    # Children always carry larger labels, so building in decreasing label
    # order sees every child before its parent.
    built: dict[int, Port] = {}
    for v in sorted(adj, reverse=True):
        built[v] = Port(v, tuple(built.pop(c) for c in adj[v]))
    return built[label]


def _slots(adj: Adjacency, root: int = 1) -> list[tuple[int, int]]:
    out = [(root, 0)]
    stack = [(root, 0)]
    while stack:
        v, i = stack.pop()
        if i > 0:
            out.append((v, i))
        if i < len(adj[v]):
            child = adj[v][i]
            stack.append((v, i + 1))
            out.append((child, 0))
            stack.append((child, 0))
    return out


def gap_positions(t: Port) -> list[GapSlot]:
    return [GapSlot(v, i) for v, i in _slots(_adjacency(t), t.label)]


def _insert(adj: Adjacency, x: int):
    m = len(adj)
    if not 1 <= x <= 2 * m - 1:
        raise ValidationError(f"insertion position {x} out of range 1..{2 * m - 1} for {m} nodes")
    v, i = _slots(adj)[x - 1]
    adj[v].insert(i, m + 1)
    adj[m + 1] = []


def _remove_max(adj: Adjacency) -> int:
    m = len(adj)
    if m < 2:
        raise ValidationError("cannot remove a node from a single-node PORT")
    del adj[m]
    for v, children in adj.items():
        if m in children:
            i = children.index(m)
            children.pop(i)
            return _slots(adj).index((v, i)) + 1
    raise AssertionError(f"node {m} has no parent")


def insert_node(t: Port, x: int) -> Port:
    adj = _adjacency(t)
    _insert(adj, x)
    return _build(adj)


def remove_max(t: Port) -> tuple[Port, int]:
    """Delete the largest label (always a leaf) and return its gap index."""
    adj = _adjacency(t)
    x = _remove_max(adj)
    return _build(adj), x


def word_to_port(w: TrapezoidalWord) -> Port:
    adj: Adjacency = {1: []}
    for x in w.digits:
        _insert(adj, x)
    return _build(adj)


def port_to_word(t: Port) -> TrapezoidalWord:
    adj = _adjacency(t)
    digits = []
    while len(adj) > 1:
        digits.append(_remove_max(adj))
    return TrapezoidalWord(tuple(reversed(digits)))

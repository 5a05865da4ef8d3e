"""Stanley's coding of phylogenetic trees by 2-partitions, and its inverse.

For a tree with n + 1 leaves, the non-root internal nodes receive the labels
n+2, ..., 2n in turn.  At each step the candidates are the unlabelled nodes
whose two children already carry labels; the one with the smallest child
label is labelled next.  The sibling pairs then form a 2-partition of
{1, ..., 2n}.

Decoding replays the same order.  For each new label, the next block is the
unprocessed block with both entries already present and the smallest entry.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .core import PhyloTree, Subtree, TreebijError, TwoPartition, ValidationError


class InvalidCodeError(TreebijError):
    """A 2-partition that does not decode to a phylogenetic tree."""


@dataclass(frozen=True)
class InternalLabelling:
    """Stanley labels of the non-root internal nodes.

    ``labels`` maps each internal subtree (as stored in the canonical
    :class:`PhyloTree`) to its label.  The root has no entry.
    """

    labels: dict

    def __getitem__(self, node: Subtree) -> int:
        if isinstance(node, int):
            return node
        return self.labels[node]

    def __len__(self) -> int:
        return len(self.labels)

    def values(self):
        return self.labels.values()


def label_internal(t: PhyloTree) -> InternalLabelling:
    n = t.n
    if n < 1:
        raise ValidationError("the one-leaf tree has no internal nodes to label")
    parent: dict = {}
    for node in t.internal_nodes():
        parent[node[0]] = node
        parent[node[1]] = node

    labels: dict = {}

    def label_of(node):
        return node if isinstance(node, int) else labels.get(node)

    def candidate(node) -> int | None:
        if node is t.root or node in labels:
            return None
        a, b = label_of(node[0]), label_of(node[1])
        if a is None or b is None:
            return None
        return min(a, b)

    heap: list = []  # keys are distinct child labels, so nodes are never compared
    for node in t.internal_nodes():
        key = candidate(node)
        if key is not None:
            heapq.heappush(heap, (key, node))

    for current in range(n + 2, 2 * n + 1):
        assert heap, f"labelling stalled at label {current}"
        _, node = heapq.heappop(heap)
        labels[node] = current
        up = parent[node]
        key = candidate(up)
        if key is not None:
            heapq.heappush(heap, (key, up))
    assert len(labels) == n - 1
    return InternalLabelling(labels)


def phylo_to_partition(t: PhyloTree) -> TwoPartition:
    if t.n == 0:
        return TwoPartition()
    labelling = label_internal(t)
    return TwoPartition(tuple((labelling[a], labelling[b]) for a, b in t.internal_nodes()))


def partition_to_phylo(p: TwoPartition) -> PhyloTree:
    n = p.n
    if n == 0:
        return PhyloTree(1)
    partner = p.partner()
    fragments: dict[int, Subtree] = {leaf: leaf for leaf in range(1, n + 2)}
    ready: list[int] = []  # smallest entries of blocks whose entries are both present

    def arrive(label: int):
        other = partner[label]
        if other in fragments:
            heapq.heappush(ready, min(label, other))

    for a, b in p.blocks:
        if b <= n + 1:
            heapq.heappush(ready, a)

    for current in range(n + 2, 2 * n + 1):
        if not ready:
            raise InvalidCodeError(f"no block has both entries below {current}")
        a = heapq.heappop(ready)
        b = partner[a]
        if a not in fragments or b not in fragments:
            raise InvalidCodeError(f"block {{{a},{b}}} refers to a consumed fragment")
        fragments[current] = (fragments.pop(a), fragments.pop(b))
        arrive(current)

    if len(fragments) != 2:
        raise InvalidCodeError(f"{len(fragments)} fragments remain, expected 2")
    a, b = fragments
    if partner[a] != b:
        raise InvalidCodeError(f"remaining fragments {a} and {b} are not a block")
    return PhyloTree((fragments[a], fragments[b]))

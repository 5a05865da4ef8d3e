"""Bijection between trapezoidal words and 2-partitions by rotation.

A 2-partition of {1, ..., 2n-2} grows to one of {1, ..., 2n} under a digit
1 <= x <= 2n-1.  If x = 2n-1, the pair {2n-1, 2n} becomes a new block.
Otherwise x = b, and the block {a, b} is rotated into {a, 2n-1} and {b, 2n}.
Each step can be undone, so reading a word from left to right and shrinking
a partition from the top are mutually inverse.
"""
from __future__ import annotations

from .core import TrapezoidalWord, TwoPartition, ValidationError


def grow_partition(p: TwoPartition, x: int) -> TwoPartition:
    n = p.n + 1
    if not 1 <= x <= 2 * n - 1:
        raise ValidationError(f"growth digit {x} out of range 1..{2 * n - 1} for n = {n}")
    if x == 2 * n - 1:
        return TwoPartition(p.blocks + ((2 * n - 1, 2 * n),))
    blocks = []
    for a, b in p.blocks:
        if a == x:
            blocks += [(b, 2 * n - 1), (a, 2 * n)]
        elif b == x:
            blocks += [(a, 2 * n - 1), (b, 2 * n)]
        else:
            blocks.append((a, b))
    return TwoPartition(tuple(blocks))


def shrink_partition(p: TwoPartition) -> tuple[TwoPartition, int]:
    """Undo the last growth step; return the smaller partition and its digit."""
    n = p.n
    if n < 1:
        raise ValidationError("cannot shrink the empty partition")
    top, second = 2 * n, 2 * n - 1
    partner = p.partner()
    b = partner[top]
    if b == second:
        return TwoPartition(tuple(blk for blk in p.blocks if blk != (second, top))), second
    a = partner[second]
    blocks = [blk for blk in p.blocks if top not in blk and second not in blk]
    blocks.append((a, b))
    return TwoPartition(tuple(blocks)), b


def word_to_partition(w: TrapezoidalWord) -> TwoPartition:
    p = TwoPartition()
    for x in w.digits:
        p = grow_partition(p, x)
    return p


def partition_to_word(p: TwoPartition) -> TrapezoidalWord:
    digits = []
    while p.n:
        p, x = shrink_partition(p)
        digits.append(x)
    return TrapezoidalWord(tuple(reversed(digits)))

"""Counting, ranking, exhaustive iteration and seeded sampling of words.

Words of length n are numbered in lexicographic order, which is the
mixed-radix system with radices 1, 3, 5, ..., 2n-1 (first digit most
significant).  Ranks are Python ints, so nothing overflows at large n.

Sampling uses :class:`random.Random` (MT19937), seeded once per call with the
given 64-bit seed; digit i is ``randrange(2i - 1) + 1``, drawn in order
i = 1..n.  That stream is fixed by the CPython ``random`` module and is the
same on every platform.
"""
from __future__ import annotations

import itertools
import math
import random
from typing import Iterator

from .core import TrapezoidalWord, ValidationError


def double_factorial(m: int) -> int:
    """Return 1 * 3 * ... * m for odd m >= -1, with (-1)!! = 1."""
    if m < -1 or m % 2 == 0:
        raise ValidationError(f"double factorial needs an odd integer >= -1, got {m}")
    return math.prod(range(1, m + 1, 2))


def count_objects(n: int) -> int:
    """Return (2n)! / (2^n n!), the size of each family at parameter n."""
    if n < 0:
        raise ValidationError(f"n must be nonnegative, got {n}")
    count, rem = divmod(math.factorial(2 * n), 2**n * math.factorial(n))
    assert rem == 0 and count == double_factorial(2 * n - 1)
    return count


def _weights(n: int) -> list[int]:
    # weight of digit i is the product of the radices to its right
    weights = [1] * n
    for i in range(n - 2, -1, -1):
        weights[i] = weights[i + 1] * (2 * (i + 2) - 1)
    return weights


def rank(w: TrapezoidalWord) -> int:
    return sum((x - 1) * wt for x, wt in zip(w.digits, _weights(len(w))))


def unrank(r: int, n: int) -> TrapezoidalWord:
    total = double_factorial(2 * n - 1)
    if not 0 <= r < total:
        raise ValidationError(f"rank {r} out of range 0..{total - 1} for n = {n}")
    digits = []
    for wt in _weights(n):
        q, r = divmod(r, wt)
        digits.append(q + 1)
    return TrapezoidalWord(tuple(digits))


def iter_words(n: int) -> Iterator[TrapezoidalWord]:
    for digits in itertools.product(*(range(1, 2 * i) for i in range(1, n + 1))):
        yield TrapezoidalWord(digits)


def sample(n: int, seed: int) -> TrapezoidalWord:
    if not 0 <= seed < 2**64:
        raise ValidationError(f"seed must be a 64-bit unsigned integer, got {seed}")
    rng = random.Random(seed)
    return TrapezoidalWord(tuple(rng.randrange(2 * i - 1) + 1 for i in range(1, n + 1)))

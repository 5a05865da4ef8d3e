"""Any-to-any conversion and exhaustive verification across the four families.

The codecs form a path::

    phylo -- partition -- word -- port

and a conversion walks that path one edge at a time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core import FORMATTERS, PARSERS
from .enumeration import count_objects, iter_words
from .growth import partition_to_word, word_to_partition
from .port_codec import port_to_word, word_to_port
from .stanley import partition_to_phylo, phylo_to_partition

KINDS = ("phylo", "partition", "word", "port")

_STEPS = {
    ("phylo", "partition"): phylo_to_partition,
    ("partition", "phylo"): partition_to_phylo,
    ("partition", "word"): partition_to_word,
    ("word", "partition"): word_to_partition,
    ("word", "port"): word_to_port,
    ("port", "word"): port_to_word,
}


def route(source: str, target: str) -> list[str]:
    i, j = KINDS.index(source), KINDS.index(target)
    if i <= j:
        return list(KINDS[i:j + 1])
    return list(reversed(KINDS[j:i + 1]))


def convert_value(value, source: str, target: str):
    path = route(source, target)
    for a, b in zip(path, path[1:]):
        value = _STEPS[a, b](value)
    return value


def convert(source: str, target: str, text: str) -> str:
    """Parse ``text`` as ``source`` and return canonical ``target`` text."""
    return FORMATTERS[target](convert_value(PARSERS[source](text), source, target))


def enumerate_objects(kind: str, n: int) -> Iterator[str]:
    """Canonical text of every object of size n, in lexicographic word order."""
    fmt = FORMATTERS[kind]
    for w in iter_words(n):
        yield fmt(convert_value(w, "word", kind))


@dataclass
class VerifyResult:
    n: int
    expected: int
    words: int = 0
    partitions: set = field(default_factory=set)
    ports: set = field(default_factory=set)
    phylos: set = field(default_factory=set)
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None and all(
            count == self.expected
            for count in (self.words, len(self.partitions), len(self.ports), len(self.phylos))
        )


def verify_size(n: int) -> VerifyResult:
    """Round-trip every word of length n through all three codecs."""
    result = VerifyResult(n, count_objects(n))
    for w in iter_words(n):
        result.words += 1
        p = word_to_partition(w)
        if partition_to_word(p) != w:
            result.counterexample = f"word {w} -> partition {p} -> word {partition_to_word(p)}"
            break
        t = word_to_port(w)
        if port_to_word(t) != w:
            result.counterexample = f"word {w} -> port {t} -> word {port_to_word(t)}"
            break
        tree = partition_to_phylo(p)
        if phylo_to_partition(tree) != p:
            result.counterexample = (
                f"partition {p} -> phylo {tree} -> partition {phylo_to_partition(tree)}"
            )
            break
        result.partitions.add(p)
        result.ports.add(t)
        result.phylos.add(tree)
    else:
        for family, seen in (("partition", result.partitions), ("port", result.ports),
                             ("phylo", result.phylos)):
            if len(seen) != result.expected:
                result.counterexample = (
                    f"n = {n}: {len(seen)} distinct {family} images, expected {result.expected}"
                )
                break
    return result

"""Bijections among four families counted by the double factorial (2n-1)!!."""
from .convert import KINDS, convert, enumerate_objects, verify_size
from .core import (
    GapSlot,
    ParseError,
    PhyloTree,
    Port,
    TrapezoidalWord,
    TreebijError,
    TwoPartition,
    ValidationError,
    format_partition,
    format_phylo,
    format_port,
    format_word,
    parse_partition,
    parse_phylo,
    parse_port,
    parse_word,
)
from .enumeration import count_objects, double_factorial, iter_words, rank, sample, unrank
from .growth import grow_partition, partition_to_word, shrink_partition, word_to_partition
from .port_codec import gap_positions, insert_node, port_to_word, remove_max, word_to_port
from .stanley import (
    InternalLabelling,
    InvalidCodeError,
    label_internal,
    partition_to_phylo,
    phylo_to_partition,
)

__version__ = "0.1.0"

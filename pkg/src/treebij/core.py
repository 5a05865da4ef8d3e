"""Domain types for the four double-factorial families and their text formats.

Every value is immutable and kept in canonical form, so structural equality
is object equality.  The grammars are:

    word        ``1,2,5,5,2,4``        (empty string for n = 0)
    partition   ``{1,3}{2,10}{4,12}``  (empty string for n = 0)
    port        ``1(2(6,7,3),5,4)``    (children in planar order)
    phylo       ``(((1,4),6),3)``      (a bare ``1`` is the one-leaf tree)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Tuple, Union


class TreebijError(ValueError):
    """Base class for malformed or invalid input."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class ParseError(TreebijError):
    """Text does not match the grammar."""


class ValidationError(TreebijError):
    """Text is well formed but violates an invariant of the type."""


# ---------------------------------------------------------------------------
# Values
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrapezoidalWord:
    """A digit sequence x_1..x_n with 1 <= x_i <= 2i - 1."""

    digits: Tuple[int, ...] = ()

    def __post_init__(self):
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        for i, x in enumerate(digits, start=1):
            if not 1 <= x <= 2 * i - 1:
                raise ValidationError(
                    f"digit x_{i} = {x} out of range: must satisfy 1 <= x_{i} <= {2 * i - 1}"
                )

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __str__(self) -> str:
        return format_word(self)


Block = Tuple[int, int]


@dataclass(frozen=True)
class TwoPartition:
    """A partition of {1, ..., 2n} into n two-element blocks.

    Blocks are normalized on construction: ``(a, b)`` with ``a < b``,
    sorted by the smaller element.
    """

    blocks: Tuple[Block, ...] = ()

    def __post_init__(self):
        blocks = []
        seen = set()
        for block in self.blocks:
            block = tuple(block)
            if len(block) != 2:
                raise ValidationError(f"block {set(block)} has {len(block)} elements, expected 2")
            a, b = block
            for e in block:
                if e in seen:
                    raise ValidationError(f"element {e} appears in more than one block")
                seen.add(e)
            blocks.append((a, b) if a < b else (b, a))
        if seen != set(range(1, 2 * len(blocks) + 1)):
            raise ValidationError(
                f"ground set must be exactly {{1,...,{2 * len(blocks)}}}, got {sorted(seen)}"
            )
        blocks.sort()
        object.__setattr__(self, "blocks", tuple(blocks))

    @property
    def n(self) -> int:
        return len(self.blocks)

    def partner(self) -> dict[int, int]:
        """Map each element to the other element of its block."""
        out = {}
        for a, b in self.blocks:
            out[a] = b
            out[b] = a
        return out

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Port:
    """A node of a plane oriented recursive tree; the root node is the tree.

    Construction only checks the local increasing condition.  Use
    :meth:`validate` for the whole-tree label invariants.
    """

    label: int
    children: Tuple["Port", ...] = ()

    def __post_init__(self):
        children = tuple(self.children)
        object.__setattr__(self, "children", children)
        for child in children:
            if child.label <= self.label:
                raise ValidationError(
                    f"edge {self.label} -> {child.label} is not increasing"
                )

    @property
    def size(self) -> int:
        return sum(1 for _ in self.labels())

    def labels(self) -> Iterator[int]:
        """Labels in preorder."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node.label
            stack.extend(reversed(node.children))

    def validate(self) -> "Port":
        if self.label != 1:
            raise ValidationError(f"root label is {self.label}, expected 1")
        labels = sorted(self.labels())
        if labels != list(range(1, len(labels) + 1)):
            raise ValidationError(f"labels {labels} are not a permutation of 1..{len(labels)}")
        return self

    def __str__(self) -> str:
        return format_port(self)


# A phylogenetic subtree is a leaf label or a pair of subtrees.
Subtree = Union[int, Tuple["Subtree", "Subtree"]]


def min_leaf(t: Subtree) -> int:
    while not isinstance(t, int):
        t = t[0]  # canonical order keeps the minimum leftmost
    return t


def _canonical(t) -> Subtree:
    if isinstance(t, int):
        return t
    if len(t) != 2:
        raise ValidationError(f"internal node has {len(t)} children, expected 2")
    a, b = _canonical(t[0]), _canonical(t[1])
    return (a, b) if min_leaf(a) < min_leaf(b) else (b, a)


def leaves(t: Subtree) -> Iterator[int]:
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, int):
            yield node
        else:
            stack += (node[1], node[0])


@dataclass(frozen=True)
class PhyloTree:
    """A rooted binary nonplanar tree with leaves labelled 1..n+1.

    ``root`` is a nested structure: an ``int`` leaf or a 2-tuple of
    subtrees.  It is stored with the child holding the smaller minimum leaf
    first, which makes ``==`` the leaf-label-preserving isomorphism test.
    """

    root: Subtree = field(default=1)

    def __post_init__(self):
        root = _canonical(self.root)
        labels = sorted(leaves(root))
        if labels != list(range(1, len(labels) + 1)):
            raise ValidationError(f"leaf labels {labels} are not exactly 1..{len(labels)}")
        object.__setattr__(self, "root", root)

    @property
    def leaf_count(self) -> int:
        return sum(1 for _ in leaves(self.root))

    @property
    def n(self) -> int:
        return self.leaf_count - 1

    def internal_nodes(self) -> Iterator[Tuple[Subtree, Subtree]]:
        """Internal nodes in postorder, root last."""
        stack = [(self.root, False)]
        while stack:
            node, done = stack.pop()
            if isinstance(node, int):
                continue
            if done:
                yield node
            else:
                stack.append((node, True))
                stack.append((node[1], False))
                stack.append((node[0], False))

    def __str__(self) -> str:
        return format_phylo(self)


@dataclass(frozen=True)
class GapSlot:
    """An insertion position: child index ``child_index`` under ``parent_label``."""

    parent_label: int
    child_index: int

    def __iter__(self):
        return iter((self.parent_label, self.child_index))


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def integer(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            found = repr(self.text[start]) if start < len(self.text) else "end of input"
            raise ParseError(f"expected a positive integer, found {found}", start)
        value = int(self.text[start:self.pos])
        if value < 1:
            raise ParseError(f"expected a positive integer, found {value}", start)
        return value, start

    def end(self):
        if self.peek():
            raise ParseError(f"unexpected trailing input {self.text[self.pos:]!r}", self.pos)


def parse_word(text: str) -> TrapezoidalWord:
    s = _Scanner(text)
    if not s.peek():
        return TrapezoidalWord()
    digits = []
    while True:
        value, start = s.integer()
        i = len(digits) + 1
        if value > 2 * i - 1:
            raise ValidationError(
                f"digit x_{i} = {value} out of range: must satisfy 1 <= x_{i} <= {2 * i - 1}",
                start,
            )
        digits.append(value)
        if not s.peek():
            break
        s.expect(",")
    return TrapezoidalWord(tuple(digits))


def format_word(w: TrapezoidalWord) -> str:
    return ",".join(map(str, w.digits))


def parse_partition(text: str) -> TwoPartition:
    s = _Scanner(text)
    blocks = []
    seen: dict[int, int] = {}
    while s.peek():
        start = s.pos
        s.expect("{")
        block = []
        if s.peek() != "}":
            while True:
                value, offset = s.integer()
                if value in seen:
                    raise ValidationError(f"element {value} appears in more than one block", offset)
                seen[value] = offset
                block.append(value)
                if s.peek() != ",":
                    break
                s.expect(",")
        s.expect("}")
        if len(block) != 2:
            raise ValidationError(f"block has {len(block)} elements, expected 2", start)
        blocks.append(tuple(block))
    expected = set(range(1, 2 * len(blocks) + 1))
    stray = sorted(set(seen) - expected)
    if stray:
        raise ValidationError(
            f"element {stray[0]} outside ground set {{1,...,{2 * len(blocks)}}}", seen[stray[0]]
        )
    return TwoPartition(tuple(blocks))


def format_partition(p: TwoPartition) -> str:
    return "".join(f"{{{a},{b}}}" for a, b in p.blocks)


def _check_labels(offsets: dict[int, int], count: int, what: str):
    for label, offset in offsets.items():
        if label > count:
            raise ValidationError(f"{what} {label} outside 1..{count}", offset)


def parse_port(text: str) -> Port:
    s = _Scanner(text)
    offsets: dict[int, int] = {}

    def node() -> Port:
        label, offset = s.integer()
        if label in offsets:
            raise ValidationError(f"label {label} used twice", offset)
        offsets[label] = offset
        children = []
        if s.peek() == "(":
            s.expect("(")
            while True:
                child = node()
                if child.label <= label:
                    raise ValidationError(f"edge {label} -> {child.label} is not increasing", offset)
                children.append(child)
                if s.peek() != ",":
                    break
                s.expect(",")
            s.expect(")")
        return Port(label, tuple(children))

    root = node()
    s.end()
    if root.label != 1:
        raise ValidationError(f"root label is {root.label}, expected 1", offsets[root.label])
    _check_labels(offsets, len(offsets), "label")
    return root.validate()


def format_port(t: Port) -> str:
    out = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append(str(item.label))
        if item.children:
            out.append("(")
            stack.append(")")
            for k, child in enumerate(reversed(item.children)):
                stack.append(child)
                if k < len(item.children) - 1:
                    stack.append(",")
    return "".join(out)


def parse_phylo(text: str) -> PhyloTree:
    s = _Scanner(text)
    offsets: dict[int, int] = {}

    def node() -> Subtree:
        if s.peek() == "(":
            start = s.pos
            s.expect("(")
            kids = [node()]
            while s.peek() == ",":
                s.expect(",")
                kids.append(node())
            s.expect(")")
            if len(kids) != 2:
                raise ValidationError(f"internal node has {len(kids)} children, expected 2", start)
            return (kids[0], kids[1])
        value, offset = s.integer()
        if value in offsets:
            raise ValidationError(f"leaf label {value} used twice", offset)
        offsets[value] = offset
        return value

    root = node()
    s.end()
    _check_labels(offsets, len(offsets), "leaf label")
    return PhyloTree(root)


def format_phylo(t: PhyloTree) -> str:
    out = []
    stack: list = [t.root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, int):
            out.append(str(item))
        else:
            out.append("(")
            stack += (")", item[1], ",", item[0])
    return "".join(out)


PARSERS = {
    "word": parse_word,
    "partition": parse_partition,
    "port": parse_port,
    "phylo": parse_phylo,
}

FORMATTERS = {
    "word": format_word,
    "partition": format_partition,
    "port": format_port,
    "phylo": format_phylo,
}

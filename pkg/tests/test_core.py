import pytest
from hypothesis import given
from hypothesis import strategies as st

from treebij import (
    ParseError,
    PhyloTree,
    Port,
    TrapezoidalWord,
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
from treebij.core import TreebijError

from oracles import all_pairings, all_phylo_shapes, all_port_terms, all_word_digits

FIG2 = "(((1,4),6),((2,(5,7)),3))"


@st.composite
def words(draw, max_len=12):
    n = draw(st.integers(0, max_len))
    return TrapezoidalWord(tuple(draw(st.integers(1, 2 * i - 1)) for i in range(1, n + 1)))


# -- words ---------------------------------------------------------------------

def test_parse_word_paper_example():
    assert parse_word("1,2,5,5,2,4") == TrapezoidalWord((1, 2, 5, 5, 2, 4))


def test_parse_word_empty():
    w = parse_word("")
    assert len(w) == 0
    assert format_word(w) == ""


def test_parse_word_bound_violation_names_index_and_bound():
    with pytest.raises(ValidationError) as exc:
        parse_word("1,4")
    assert "x_2" in str(exc.value) and "3" in str(exc.value)
    assert exc.value.offset == 2


@pytest.mark.parametrize("text, offset", [("1,,2", 2), ("1;2", 1), ("a", 0), ("1,0", 2), ("1,", 2)])
def test_parse_word_syntax_errors_carry_offset(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_word(text)
    assert exc.value.offset == offset


def test_format_word():
    assert format_word(TrapezoidalWord((1, 2, 5, 5, 2, 4))) == "1,2,5,5,2,4"
    assert format_word(TrapezoidalWord((1, 1))) == "1,1"
    assert parse_word(format_word(TrapezoidalWord((1, 1)))) == TrapezoidalWord((1, 1))


def test_word_constructor_validates():
    with pytest.raises(ValidationError):
        TrapezoidalWord((2,))


@pytest.mark.parametrize("n", range(0, 6))
def test_word_round_trip_exhaustive(n):
    for digits in all_word_digits(n):
        w = TrapezoidalWord(digits)
        assert parse_word(format_word(w)) == w
        assert format_word(parse_word(format_word(w))) == format_word(w)


@given(words())
def test_word_round_trip(w):
    assert parse_word(format_word(w)) == w


# -- partitions ------------------------------------------------------------------

def test_parse_partition_canonicalizes_paper_example():
    p = parse_partition("{1,3}{2,10}{4,12}{9,11}{6,7}{5,8}")
    assert format_partition(p) == "{1,3}{2,10}{4,12}{5,8}{6,7}{9,11}"


def test_parse_partition_within_pair_order():
    assert parse_partition("{2,1}").blocks == ((1, 2),)


def test_format_partition():
    assert format_partition(TwoPartition(((1, 2),))) == "{1,2}"
    assert format_partition(TwoPartition(((2, 3), (1, 4)))) == "{1,4}{2,3}"
    assert format_partition(TwoPartition()) == ""
    assert parse_partition("") == TwoPartition()


@pytest.mark.parametrize("text", [
    "{1,2}{2,3}",       # repeated element
    "{1,2}{3,5}",       # ground set not 1..4
    "{1,2,3}",          # block too large
    "{1}{2}",           # blocks too small
    "{}",
])
def test_parse_partition_validation_errors(text):
    with pytest.raises(ValidationError) as exc:
        parse_partition(text)
    assert exc.value.offset is not None


@pytest.mark.parametrize("text", ["{1,2", "1,2", "{1,2}}", "{1;2}", "{1,2}x"])
def test_parse_partition_syntax_errors(text):
    with pytest.raises(ParseError) as exc:
        parse_partition(text)
    assert exc.value.offset is not None


@pytest.mark.parametrize("n", range(0, 6))
def test_partition_round_trip_exhaustive(n):
    for blocks in all_pairings(range(1, 2 * n + 1)):
        p = TwoPartition(blocks)
        assert parse_partition(format_partition(p)) == p
        # the oracle emits canonical blocks, so format is canonical text
        assert format_partition(p) == "".join(f"{{{a},{b}}}" for a, b in blocks)


# -- PORTs -----------------------------------------------------------------------

def test_parse_port_paper_final_tree():
    t = parse_port("1(2(6,7,3),5,4)")
    assert t.size == 7
    assert [c.label for c in t.children] == [2, 5, 4]
    assert [c.label for c in t.children[0].children] == [6, 7, 3]


def test_parse_port_single_node_and_fig1():
    assert parse_port("1") == Port(1)
    t = parse_port("1(3(4),2(5))")
    assert t == Port(1, (Port(3, (Port(4),)), Port(2, (Port(5),))))


@pytest.mark.parametrize("text, error", [
    ("2", ValidationError),            # root not 1
    ("1(3)", ValidationError),         # labels not 1..m
    ("1(2,2)", ValidationError),       # duplicate
    ("1(3(2))", ValidationError),      # non-increasing edge
    ("1(", ParseError),
    ("1(2", ParseError),
    ("1(2)(3)", ParseError),
    ("1()", ParseError),
])
def test_parse_port_errors(text, error):
    with pytest.raises(error) as exc:
        parse_port(text)
    assert exc.value.offset is not None


@pytest.mark.parametrize("m", range(1, 7))
def test_port_round_trip_exhaustive(m):
    for text in all_port_terms(range(1, m + 1)):
        t = parse_port(text)
        assert format_port(t) == text
        assert parse_port(format_port(t)) == t


# -- phylogenetic trees ------------------------------------------------------------

def test_parse_phylo_fig2():
    t = parse_phylo(FIG2)
    assert t.leaf_count == 7
    assert format_phylo(t) == FIG2


def test_parse_phylo_small():
    assert format_phylo(parse_phylo("(1,2)")) == "(1,2)"
    assert format_phylo(parse_phylo("(2,1)")) == "(1,2)"
    assert format_phylo(parse_phylo("((2,1),3)")) == "((1,2),3)"
    assert format_phylo(parse_phylo("(3,(2,1))")) == "((1,2),3)"


def test_single_leaf_tree():
    t = parse_phylo("1")
    assert t == PhyloTree(1)
    assert t.n == 0
    assert format_phylo(t) == "1"


@pytest.mark.parametrize("text, error", [
    ("(1,2,3)", ValidationError),
    ("((1),2)", ValidationError),
    ("(1,3)", ValidationError),
    ("(1,1)", ValidationError),
    ("2", ValidationError),
    ("(1,2", ParseError),
    ("(1 2)", ParseError),
    ("", ParseError),
])
def test_parse_phylo_errors(text, error):
    with pytest.raises(error) as exc:
        parse_phylo(text)
    assert exc.value.offset is not None


def test_nonplanar_equality():
    mirrored = parse_phylo("((3,((7,5),2)),(6,(4,1)))")
    assert mirrored == parse_phylo(FIG2)
    assert format_phylo(mirrored) == FIG2
    assert parse_phylo("((1,2),(3,4))") != parse_phylo("((1,3),(2,4))")


@pytest.mark.parametrize("n", range(0, 6))
def test_phylo_round_trip_exhaustive(n):
    seen = set()
    for shape in all_phylo_shapes(range(1, n + 2)):
        t = PhyloTree(shape)
        text = format_phylo(t)
        assert parse_phylo(text) == t
        assert format_phylo(parse_phylo(text)) == text
        assert PhyloTree(t.root) == t  # canonicalization is idempotent
        seen.add(text)
    assert len(seen) == len(list(all_phylo_shapes(range(1, n + 2))))


def test_errors_are_value_errors():
    assert issubclass(TreebijError, ValueError)

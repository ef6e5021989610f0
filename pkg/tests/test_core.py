from itertools import product

import pytest
from hypothesis import given, strategies as st

from dhcolor import (
    Coloring,
    DirectedEdge,
    DirectedHypergraph,
    ParseError,
    ValidationError,
    edge,
    is_proper,
    normalize,
    paper_i,
    parse,
    parse_coloring,
    serialize,
    serialize_coloring,
)

PAPER_I_TEXT = """\
e v1 v2 > v3
e v2 v3 > v4
e v3 v4 > v5
e v4 v5 > v1
e v1 v5 > v2
e v1 v3 > v4
e v2 v4 > v5
e v3 v5 > v1
e v1 v4 > v2
e v2 v5 > v3
"""


class TestParse:
    def test_bare_edge_line(self):
        hg = parse("a b > c")
        assert hg.vertices == ("a", "b", "c")
        assert hg.edges == (edge(["a", "b"], ["c"]),)

    def test_ten_line_file_matches_builtin(self):
        assert parse(PAPER_I_TEXT) == paper_i()

    def test_head_tail_overlap_rejected(self):
        with pytest.raises(ParseError):
            parse("a > a")

    def test_declared_vertices_come_first(self):
        hg = parse("e a b > c\nv z\n")
        assert hg.vertices == ("z", "a", "b", "c")

    def test_comments_and_blanks(self):
        hg = parse("# intro\n\nv a  # trailing\ne a b > c\n")
        assert hg.vertices == ("a", "b", "c")

    def test_empty_side(self):
        hg = parse("e a b >\ne > c d\n")
        assert hg.edges[0].head == frozenset()
        assert hg.edges[1].tail == frozenset()

    @pytest.mark.parametrize(
        "text",
        ["e >", "e a > b > c", "v", "v a b", "v a\nv a", "what is this", "e a ## > b"],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse(text)


class TestSerialize:
    def test_canonical_single_edge(self):
        hg = parse("a b > c")
        assert serialize(hg) == "v a\nv b\nv c\ne a b > c\n"

    def test_empty_hypergraph(self):
        assert serialize(DirectedHypergraph((), ())) == ""

    def test_sides_follow_vertex_order(self):
        hg = DirectedHypergraph(("y", "x", "z"), (edge(["x", "y"], ["z"]),))
        assert "e y x > z" in serialize(hg)

    def test_roundtrip_paper_i(self):
        hg = paper_i()
        assert parse(serialize(hg)) == hg


class TestNormalize:
    def test_superset_dropped(self):
        hg = parse("e a b > c\ne a b > c d\n")
        out = normalize(hg)
        assert out.edges == (edge(["a", "b"], ["c"]),)
        assert out.vertices == hg.vertices

    def test_duplicate_vertex_sets_keep_first(self):
        hg = parse("e a b > c\ne a c > b\n")
        out = normalize(hg)
        assert out.edges == (edge(["a", "b"], ["c"]),)

    def test_paper_i_unchanged(self):
        hg = paper_i()
        # All ten edges are distinct triples, so no pair is contained in another.
        sets = [e.vertices for e in hg.edges]
        assert not any(a <= b for i, a in enumerate(sets) for j, b in enumerate(sets) if i != j)
        assert normalize(hg) == hg


class TestIsProper:
    def test_two_classes(self):
        hg = parse("a b > c")
        assert is_proper(hg, Coloring({"a": 0, "b": 0, "c": 1}, 2))

    def test_monochromatic(self):
        hg = parse("a b > c")
        assert not is_proper(hg, Coloring({"a": 0, "b": 0, "c": 0}, 2))

    def test_paper_i_never_2_colorable(self):
        hg = paper_i()
        for bits in product((0, 1), repeat=5):
            coloring = Coloring(dict(zip(hg.vertices, bits)), 2)
            assert not is_proper(hg, coloring)

    def test_unassigned_vertex(self):
        hg = parse("a b > c")
        with pytest.raises(ValidationError):
            is_proper(hg, Coloring({"a": 0, "b": 1}, 2))


class TestValidation:
    def test_bad_names(self):
        for name in ("", ">", "#", "a b"):
            with pytest.raises(ValidationError):
                DirectedHypergraph((name,), ())

    def test_duplicate_vertices(self):
        with pytest.raises(ValidationError):
            DirectedHypergraph(("a", "a"), ())

    def test_edge_outside_vertex_set(self):
        with pytest.raises(ValidationError):
            DirectedHypergraph(("a",), (edge(["a"], ["b"]),))

    def test_empty_edge(self):
        with pytest.raises(ValidationError):
            DirectedEdge(frozenset(), frozenset())

    def test_coloring_index_bound(self):
        with pytest.raises(ValidationError):
            Coloring({"a": 2}, 2)

    def test_vertex_order_is_part_of_the_value(self):
        a = parse("e a b > c")
        b = a.with_vertex_order(("c", "b", "a"))
        assert a != b
        assert parse(serialize(b)) == b


class TestColoringFile:
    def test_roundtrip(self):
        hg = parse("a b > c")
        coloring = Coloring({"a": 0, "b": 1, "c": 0}, 2)
        text = serialize_coloring(hg, coloring)
        assert text == "a 0\nb 1\nc 0\n"
        back = parse_coloring(text, k=2)
        assert back == coloring

    def test_bad_lines(self):
        for text in ("a", "a x", "a -1", "a 0\na 1"):
            with pytest.raises(ParseError):
                parse_coloring(text)


NAMES = tuple(f"n{i}" for i in range(6))


@st.composite
def hypergraphs(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    verts = list(NAMES[:n])
    edges = []
    if n >= 1:
        for _ in range(draw(st.integers(min_value=0, max_value=6))):
            size = draw(st.integers(min_value=1, max_value=min(4, n)))
            support = draw(
                st.lists(st.sampled_from(verts), min_size=size, max_size=size, unique=True)
            )
            heads = draw(st.integers(min_value=0, max_value=size))
            edges.append(DirectedEdge(frozenset(support[heads:]), frozenset(support[:heads])))
    order = draw(st.permutations(verts))
    return DirectedHypergraph(tuple(order), tuple(edges))


@given(hypergraphs())
def test_roundtrip_property(hg):
    assert parse(serialize(hg)) == hg


@given(hypergraphs())
def test_normalize_idempotent(hg):
    once = normalize(hg)
    assert normalize(once) == once
    # No surviving pair may be contained in another, vertex-set-wise.
    sets = [e.vertices for e in once.edges]
    assert not any(a <= b for i, a in enumerate(sets) for j, b in enumerate(sets) if i != j)


@given(hypergraphs(), st.integers(min_value=0, max_value=2**30))
def test_properness_transfers_to_normalized(hg, seed):
    import random

    rng = random.Random(seed)
    coloring = Coloring({v: rng.randint(0, 2) for v in hg.vertices}, 3)
    if is_proper(hg, coloring):
        assert is_proper(normalize(hg), coloring)


@given(hypergraphs())
def test_properness_invariant_under_color_permutation(hg):
    import random

    rng = random.Random(7)
    coloring = Coloring({v: rng.randint(0, 2) for v in hg.vertices}, 3)
    swapped = Coloring({v: (c + 1) % 3 for v, c in coloring.assignment.items()}, 3)
    assert is_proper(hg, coloring) == is_proper(hg, swapped)

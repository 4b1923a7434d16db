import pytest
from hypothesis import given, settings, strategies as st

from cographlin.graphs import (
    Cotree,
    Graph,
    NotCographError,
    ParseError,
    build_cotree,
    cotree_to_graph,
    format_cotree,
    format_edge_list,
    gen_binary_cotree,
    gen_double_factorial,
    gen_random_cotree,
    is_induced_p4,
    parse_cotree,
    parse_edge_list,
)

from conftest import all_cotrees, atlas_graphs, is_cograph


def unordered(t, u=None):
    """Child-order-insensitive form of a cotree."""
    u = t.root if u is None else u
    if t.is_leaf(u):
        return t.vertex[u]
    return (t.labels[u], frozenset(unordered(t, c) for c in t.children[u]))


class TestEdgeList:
    def test_k2(self):
        g = parse_edge_list("2 1\n0 1")
        assert g.n == 2 and g.edges() == [(0, 1)]

    def test_self_loop_names_line(self):
        with pytest.raises(ParseError, match="self-loop at line 2"):
            parse_edge_list("3 1\n1 1")

    def test_c4(self, c4):
        assert parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == c4

    def test_comments_and_duplicates(self):
        g = parse_edge_list("# header next\n3 3\n0 1\n# x\n1 0\n1 2\n")
        assert g.edges() == [(0, 1), (1, 2)]

    @pytest.mark.parametrize("text, msg", [
        ("3 1\n0 3", "out of range at line 2"),
        ("3 1\n0 x", "malformed token at line 2"),
        ("3 2\n0 1", "announces 2 edges"),
        ("3\n", "line 1"),
    ])
    def test_errors(self, text, msg):
        with pytest.raises(ParseError, match=msg):
            parse_edge_list(text)

    def test_roundtrip(self, c4):
        assert parse_edge_list(format_edge_list(c4)) == c4


class TestCotreeText:
    def test_roundtrip_canonical(self):
        for text in ["0", "S(0,1)", "S(P(0,1),P(2,3))", "P(S(P(0,1),P(2,3),P(4,5)),6)"]:
            assert format_cotree(parse_cotree(text)) == text

    def test_whitespace_and_canonicalisation(self):
        assert format_cotree(parse_cotree(" S( P(3, 1) ,P(2,0))")) == "S(P(0,2),P(1,3))"
        assert format_cotree(parse_cotree("S(S(0,1),2)")) == "S(0,1,2)"

    @pytest.mark.parametrize("text", ["S(0,", "S(0,1", "Q(0,1)", "S()", "S(0,,1)", "S(0,2)", "S(0,0)", "0 1"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_cotree(text)


class TestRecognition:
    def test_k2(self):
        assert format_cotree(build_cotree(Graph.from_edges(2, [(0, 1)]))) == "S(0,1)"

    def test_p4_witness(self, p4):
        with pytest.raises(NotCographError) as info:
            build_cotree(p4)
        assert info.value.witness == (0, 1, 2, 3)

    def test_c4(self, c4):
        t = build_cotree(c4)
        assert format_cotree(t) == "S(P(0,2),P(1,3))"
        assert cotree_to_graph(t) == c4

    def test_all_small_graphs(self):
        # soundness of both outcomes on every graph with <= 6 vertices
        for g in atlas_graphs(6):
            if is_cograph(g):
                t = build_cotree(g)
                t.validate()
                assert cotree_to_graph(t) == g
            else:
                with pytest.raises(NotCographError) as info:
                    build_cotree(g)
                assert is_induced_p4(g, info.value.witness)

    def test_roundtrip_exhaustive(self):
        for t in all_cotrees(8):
            back = build_cotree(cotree_to_graph(t))
            assert unordered(back) == unordered(t)
            assert back == t  # canonical ordering makes this exact


class TestCotreeToGraph:
    def test_pairs(self):
        assert cotree_to_graph(parse_cotree("S(0,1)")).edges() == [(0, 1)]
        assert cotree_to_graph(parse_cotree("P(0,1)")).m == 0

    def test_fig3_cotree(self):
        g = cotree_to_graph(parse_cotree("S(P(0,1),P(2,3))"))
        assert not g.has_edge(0, 1) and not g.has_edge(2, 3)
        assert all(g.has_edge(a, b) for a in (0, 1) for b in (2, 3))

    @given(st.integers(1, 30), st.integers(0, 2**64 - 1))
    @settings(max_examples=60, deadline=None)
    def test_tree_neighbourhoods_match_graph(self, n, seed):
        t = gen_random_cotree(n, seed)
        g = cotree_to_graph(t)
        assert t.edge_count() == g.m
        for x in range(n):
            assert t.closed_neighborhood(x) == g.closed_neighborhood(x)


class TestGenerators:
    def test_binary(self):
        assert format_cotree(gen_binary_cotree(1, "S")) == "S(0,1)"
        assert format_cotree(gen_binary_cotree(2, "S")) == "S(P(0,1),P(2,3))"
        t = gen_binary_cotree(3)
        assert t.n == 8
        assert {t.depth[t.leaf_node[v]] for v in range(8)} == {3}
        assert format_cotree(gen_binary_cotree(0)) == "0"

    @pytest.mark.parametrize("h", range(1, 7))
    def test_binary_series_root_connected(self, h):
        import networkx as nx
        g = cotree_to_graph(gen_binary_cotree(h, "S"))
        assert nx.is_connected(nx.Graph(g.edges()))

    def test_double_factorial_shape(self):
        assert format_cotree(gen_double_factorial(0)) == "0"
        t = gen_double_factorial(1)
        assert len(t.children[t.root]) == 3 and all(t.is_leaf(c) for c in t.children[t.root])

    @pytest.mark.parametrize("h", range(6))
    def test_double_factorial_leaves(self, h):
        expected = 1
        for i in range(1, h + 1):
            expected *= 2 * i + 1
        t = gen_double_factorial(h, "P")
        assert t.n == expected
        t.validate()

    def test_double_factorial_known_counts(self):
        assert [gen_double_factorial(h).n for h in range(4)] == [1, 3, 15, 105]

    def test_random_single_leaf(self):
        assert all(format_cotree(gen_random_cotree(1, s)) == "0" for s in range(5))

    def test_random_deterministic(self):
        assert format_cotree(gen_random_cotree(6, 7)) == format_cotree(gen_random_cotree(6, 7))

    @given(st.integers(0, 2**64 - 1))
    @settings(max_examples=50, deadline=None)
    def test_random_valid(self, seed):
        t = gen_random_cotree(9, seed)
        t.validate()
        assert t.n == 9

    def test_subtree(self):
        t = parse_cotree("P(S(P(0,1),P(2,3),P(4,5)),6)")
        sub = t.subtree(t.children[t.root][0])
        assert format_cotree(sub) == "S(P(0,1),P(2,3),P(4,5))"

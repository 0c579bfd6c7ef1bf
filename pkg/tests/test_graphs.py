import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from twodist import (
    EDGE,
    NON_EDGE,
    ColoredCompleteGraph,
    Graph,
    GraphClass,
    GraphFormatError,
    classify,
    color_partition,
    complement,
    complete_graph,
    enumerate_graphs,
    find_mixed_triple,
    graph_from_mask,
    mask_of_graph,
    parse_colored,
    parse_graph,
    render_colored,
    render_graph,
)

P3 = "3\n0 1\n1 2"


class TestParseGraph:
    def test_path_on_three_vertices(self):
        g = parse_graph(P3)
        assert g.n == 3
        assert g.edges() == [(0, 1), (1, 2)]

    def test_no_edges(self):
        g = parse_graph("4\n")
        assert g.n == 4
        assert g.edges() == []

    def test_vertex_out_of_range(self):
        with pytest.raises(GraphFormatError, match="out of range"):
            parse_graph("3\n0 3")

    def test_error_carries_line_number(self):
        with pytest.raises(GraphFormatError, match="line 3"):
            parse_graph("3\n0 1\n0 5")

    def test_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_graph("3\n1 1")

    def test_empty_input(self):
        with pytest.raises(GraphFormatError, match="empty"):
            parse_graph("")

    def test_non_integer_token(self):
        with pytest.raises(GraphFormatError, match="integer"):
            parse_graph("3\n0 x")

    def test_duplicate_edges_idempotent(self):
        g = parse_graph("3\n0 1\n1 0\n0 1")
        assert g.edges() == [(0, 1)]

    def test_comments_and_blank_lines_ignored(self):
        g = parse_graph("# a path\n3\n\n0 1\n# middle\n1 2\n")
        assert g.edges() == [(0, 1), (1, 2)]

    @given(graphs())
    def test_round_trip(self, g):
        again = parse_graph(render_graph(g))
        assert again.n == g.n
        assert np.array_equal(again.adj, g.adj)


class TestParseColored:
    def test_two_color_triangle(self):
        cg = parse_colored("3\n0 1 1\n1 2 1\n0 2 2")
        assert cg.n == 3
        assert cg.palette == (1, 2)
        assert cg.p == 2

    def test_single_pair(self):
        cg = parse_colored("2\n0 1 7")
        assert cg.palette == (7,)
        assert cg.p == 1

    def test_missing_pair(self):
        with pytest.raises(GraphFormatError, match=r"pair \(0, 2\) missing"):
            parse_colored("3\n0 1 1\n1 2 1")

    def test_conflicting_duplicate(self):
        with pytest.raises(GraphFormatError, match="recolored"):
            parse_colored("3\n0 1 1\n1 2 1\n0 2 2\n0 2 3")

    def test_consistent_duplicate_ok(self):
        cg = parse_colored("3\n0 1 1\n1 2 1\n0 2 2\n2 0 2")
        assert cg.palette == (1, 2)

    def test_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_colored("2\n0 0 1")

    def test_round_trip(self):
        cg = parse_colored("4\n0 1 5\n0 2 5\n0 3 2\n1 2 2\n1 3 9\n2 3 5")
        again = parse_colored(render_colored(cg))
        assert np.array_equal(again.color, cg.color)


class TestComplement:
    def test_p3(self):
        g = complement(parse_graph(P3))
        assert g.edges() == [(0, 2)]

    def test_complete_becomes_independent(self):
        g = complement(complete_graph(5))
        assert classify(g) is GraphClass.INDEPENDENT

    @given(graphs())
    def test_involution(self, g):
        assert np.array_equal(complement(complement(g)).adj, g.adj)


class TestClassify:
    def test_complete(self):
        assert classify(complete_graph(3)) is GraphClass.COMPLETE

    def test_independent(self):
        assert classify(parse_graph("4\n")) is GraphClass.INDEPENDENT

    def test_mixed(self):
        assert classify(parse_graph(P3)) is GraphClass.MIXED

    @given(graphs(min_n=2))
    def test_complete_iff_complement_independent(self, g):
        lhs = classify(g) is GraphClass.COMPLETE
        rhs = classify(complement(g)) is GraphClass.INDEPENDENT
        assert lhs == rhs


class TestFindMixedTriple:
    def test_p3_is_h_type(self):
        t = find_mixed_triple(parse_graph(P3))
        assert t.vertices == (0, 1, 2)
        assert t.kind == "H"
        assert t.pair_labels.count(EDGE) == 2

    def test_co_p3_is_k_type(self):
        t = find_mixed_triple(complement(parse_graph(P3)))
        assert t.vertices == (0, 1, 2)
        assert t.kind == "K"
        assert t.pair_labels.count(EDGE) == 1

    def test_complete_has_none(self):
        assert find_mixed_triple(complete_graph(4)) is None

    def test_lexicographically_smallest(self):
        # triangle on {0,1,2} plus an isolated vertex: (0,1,2) is
        # monochromatic, so the first mixed triple is (0,1,3)
        g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)])
        t = find_mixed_triple(g)
        assert t.vertices == (0, 1, 3)
        assert t.kind == "K"

    def test_colored_triple_odd_color(self):
        cg = parse_colored("3\n0 1 1\n1 2 1\n0 2 2")
        t = find_mixed_triple(cg)
        assert t.kind == "colored"
        assert t.odd_label() == 2

    def test_all_distinct_colors_picks_largest(self):
        cg = parse_colored("3\n0 1 1\n0 2 2\n1 2 3")
        assert find_mixed_triple(cg).odd_label() == 3

    @given(graphs(min_n=3, max_n=6))
    def test_mixed_graph_always_has_triple(self, g):
        if classify(g) is GraphClass.MIXED:
            assert find_mixed_triple(g) is not None
        else:
            assert find_mixed_triple(g) is None

    def test_h_odd_label_is_nonedge(self):
        t = find_mixed_triple(parse_graph(P3))
        assert t.odd_label() == NON_EDGE


class TestColorPartition:
    def test_p3(self):
        fam = color_partition(parse_graph(P3))
        assert fam.labels == (EDGE, NON_EDGE)
        assert fam.support_sizes() == (2, 1)

    def test_colored_triangle(self):
        fam = color_partition(parse_colored("3\n0 1 1\n1 2 1\n0 2 2"))
        assert fam.labels == (1, 2)
        assert fam.support_sizes() == (2, 1)

    def test_complete_drops_empty_class(self):
        fam = color_partition(complete_graph(3))
        assert fam.labels == (EDGE,)
        assert fam.p == 1
        expected = np.ones((3, 3)) - np.eye(3)
        assert np.array_equal(fam.classes[0], expected)

    @given(graphs(min_n=2))
    def test_classes_partition_all_pairs(self, g):
        fam = color_partition(g)
        total = sum(fam.classes)
        assert np.array_equal(total, np.ones((g.n, g.n)) - np.eye(g.n))
        for i in range(fam.p):
            for j in range(i + 1, fam.p):
                assert not (fam.classes[i] * fam.classes[j]).any()


class TestEnumerateGraphs:
    def test_counts(self):
        assert sum(1 for _ in enumerate_graphs(2)) == 2
        assert sum(1 for _ in enumerate_graphs(3)) == 8
        assert sum(1 for _ in enumerate_graphs(4)) == 64

    def test_mixed_counts(self):
        mixed3 = [g for g in enumerate_graphs(3) if classify(g) is GraphClass.MIXED]
        assert len(mixed3) == 6
        mixed2 = [g for g in enumerate_graphs(2) if classify(g) is GraphClass.MIXED]
        assert mixed2 == []

    def test_each_mask_exactly_once(self):
        masks = [mask_of_graph(g) for g in enumerate_graphs(3)]
        assert masks == list(range(8))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            list(enumerate_graphs(0))
        with pytest.raises(ValueError):
            list(enumerate_graphs(9))


class TestConstruction:
    def test_adjacency_must_be_symmetric(self):
        adj = np.zeros((2, 2), dtype=bool)
        adj[0, 1] = True
        with pytest.raises(ValueError, match="symmetric"):
            Graph(2, adj)

    def test_arrays_are_read_only(self):
        g = parse_graph(P3)
        with pytest.raises(ValueError):
            g.adj[0, 2] = True

    def test_colored_needs_two_vertices(self):
        with pytest.raises(ValueError):
            ColoredCompleteGraph(1, np.zeros((1, 1), dtype=np.int64))

    def test_graph_from_mask_matches_pair_order(self):
        g = graph_from_mask(3, 0b011)
        assert g.edges() == [(0, 1), (0, 2)]

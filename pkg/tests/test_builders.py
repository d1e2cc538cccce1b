"""Tests for graph families, products and the FamilySpec syntax."""

import pytest

from mvcolor.builders import (
    all_graphs,
    biclique,
    build,
    cartesian,
    complete_graph,
    connected_graphs,
    coordinates,
    corona,
    corona_copy,
    cycle_graph,
    direct,
    factors,
    fiber,
    hamming,
    is_isomorphic,
    lex,
    parse_spec,
    path_graph,
    petersen,
    random_connected_graph,
    random_tree,
    random_triangle_free,
    sampled_graphs,
    sharpness_gadget,
    star,
    strong,
    subdivision,
    subdivision_vertex,
    trees_of_order,
)
from mvcolor.exceptions import InputError, ParseError, PreconditionError


class TestFamilies:
    """Tests for the named families."""

    def test_orders_and_sizes(self) -> None:
        """Test vertex and edge counts of the atoms."""
        assert (path_graph(5).n, path_graph(5).m) == (5, 4)
        assert (cycle_graph(6).n, cycle_graph(6).m) == (6, 6)
        assert complete_graph(5).m == 10
        assert biclique(2, 3).m == 6
        assert star(4).degree(0) == 4
        assert (petersen().n, petersen().m) == (10, 15)

    @pytest.mark.parametrize("build_fn", [lambda: cycle_graph(2), lambda: path_graph(0)])
    def test_invalid_parameters(self, build_fn) -> None:
        """Test that out-of-range parameters raise InputError."""
        with pytest.raises(InputError):
            build_fn()

    def test_random_tree_is_seeded(self) -> None:
        """Test that the same seed gives the same tree."""
        a, b = random_tree(7, 9), random_tree(7, 9)
        assert a.is_tree()
        assert a.edges() == b.edges()

    def test_trees_of_order(self) -> None:
        """Test the number of non-isomorphic trees."""
        assert [len(trees_of_order(n)) for n in range(1, 8)] == [1, 1, 1, 2, 3, 6, 11]

    def test_sharpness_gadget(self) -> None:
        """Test the order of the triangle-free sharpness gadget."""
        g = sharpness_gadget(2, 2)
        assert g.n == 3 + 3 * 2 + 1
        assert g.find_triangle() is None
        assert g.is_connected()


class TestProducts:
    """Tests for graph products, corona and subdivision."""

    def test_product_sizes(self) -> None:
        """Test edge counts of the four products of P_3 and P_2."""
        g, h = path_graph(3), path_graph(2)
        assert cartesian(g, h).m == 7
        assert strong(g, h).m == 11
        assert direct(g, h).m == 4
        assert lex(g, h).m == 3 + 2 * 4

    def test_product_indexing(self) -> None:
        """Test that vertex (g, h) has index g * n(H) + h."""
        gh = strong(path_graph(3), path_graph(4))
        assert coordinates(gh, 7) == (1, 3)
        left, right = factors(gh)
        assert (left.n, right.n) == (3, 4)
        assert gh.label(7) == "(1,3)"

    def test_fibers(self) -> None:
        """Test G- and H-fibers of a Cartesian product."""
        gh = cartesian(path_graph(2), path_graph(3))
        assert fiber(gh, "G", 1).to_list() == [1, 4]
        assert fiber(gh, "H", 1).to_list() == [3, 4, 5]
        with pytest.raises(PreconditionError):
            fiber(gh, "X", 0)

    def test_factors_need_product(self) -> None:
        """Test that non-products have no factors."""
        with pytest.raises(PreconditionError):
            factors(petersen())

    def test_hamming(self) -> None:
        """Test that K_2 □ K_2 □ K_2 is the cube."""
        cube = hamming([2, 2, 2])
        assert (cube.n, cube.m) == (8, 12)
        assert is_isomorphic(cube, cartesian(cycle_graph(4), complete_graph(2)))

    def test_corona(self) -> None:
        """Test the layout of G ⊙ H."""
        g = corona(path_graph(2), complete_graph(2))
        assert g.n == 6
        assert g.m == 1 + 2 * (2 + 1)
        assert g.has_edge(0, 2) and g.has_edge(0, 3) and g.has_edge(2, 3)
        copy = corona_copy(path_graph(2), complete_graph(2), 1)
        assert copy == [4, 5]
        assert all(g.has_edge(1, v) for v in copy)

    def test_subdivision(self) -> None:
        """Test that S(K_3) is C_6 and edge vertices follow edge order."""
        s = subdivision(complete_graph(3))
        assert is_isomorphic(s, cycle_graph(6))
        assert subdivision_vertex(complete_graph(3), 2, 1) == 5
        assert "subdivision" in s.tags


class TestFamilySpec:
    """Tests for parsing and building family specs."""

    @pytest.mark.parametrize(
        "text, order",
        [
            ("path:4", 4),
            ("strong(path:3, cycle:4)", 12),
            ("strong(biclique:2,3,path:4)", 20),
            ("subdivision(complete:4)", 10),
            ("hamming:3,3", 9),
            ("corona(path:2,complete:3)", 8),
            ("tree:0,6", 6),
            ("petersen", 10),
        ],
    )
    def test_build(self, text: str, order: int) -> None:
        """Test building specs of every shape."""
        assert build(text).n == order

    def test_round_trip_text(self) -> None:
        """Test that a spec prints back to its canonical text."""
        spec = parse_spec("STRONG( path:12 , path:12 )")
        assert str(spec) == "strong(path:12,path:12)"
        assert build(spec).name == "strong(path:12,path:12)"

    def test_product_info_survives(self) -> None:
        """Test that built products keep their factors."""
        g = build("lex(cycle:4,complete:2)")
        assert g.product is not None and g.product.kind == "lex"

    @pytest.mark.parametrize(
        "text",
        ["cycle:2", "nope:3", "strong(path:3)", "path:3,4", "path:", "path:3)", "hamming"],
    )
    def test_parse_errors(self, text: str) -> None:
        """Test that malformed specs raise ParseError with a position."""
        with pytest.raises(ParseError) as info:
            build(text)
        assert info.value.position is not None


class TestCorpus:
    """Tests for the exhaustive and sampled graph corpora."""

    def test_atlas_counts(self) -> None:
        """Test the number of graphs and connected graphs on four vertices."""
        assert sum(1 for _ in all_graphs(4, min_n=4)) == 11
        assert sum(1 for _ in connected_graphs(4, min_n=4)) == 6

    def test_atlas_limit(self) -> None:
        """Test that the atlas stops at seven vertices."""
        with pytest.raises(InputError):
            list(all_graphs(8))

    def test_random_connected(self) -> None:
        """Test that random graphs are connected and seeded."""
        a = random_connected_graph(3, 9, p=0.1)
        assert a.is_connected()
        assert a.edges() == random_connected_graph(3, 9, p=0.1).edges()

    def test_random_triangle_free(self) -> None:
        """Test that triangle-free samples are connected and triangle-free."""
        for seed in range(10):
            g = random_triangle_free(seed, 8)
            assert g.is_connected()
            assert g.find_triangle() is None

    def test_sampled_graphs(self) -> None:
        """Test the count and orders of sampled graphs."""
        graphs = sampled_graphs(5, 7, seed=4)
        assert len(graphs) == 5
        assert all(2 <= g.n <= 7 and g.is_connected() for g in graphs)

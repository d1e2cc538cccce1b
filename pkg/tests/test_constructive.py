"""Tests for the closed-form colorings."""

import pytest

from mvcolor.builders import (
    complete_graph,
    cycle_graph,
    lex,
    path_graph,
    sharpness_gadget,
    subdivision,
)
from mvcolor.constructive import (
    cartesian_prism_mv,
    cycle_imv,
    defective_to_mv,
    lex_imv,
    lex_mv_2coloring,
    product_coloring,
    render_grid,
    render_grid_text,
    sharpness_coloring,
    strong_paths_imv,
    strong_paths_mv,
    subdiv_imv_from_partition,
    tree_exchange,
    trianglefree_imv,
)
from mvcolor.core.graph import Graph
from mvcolor.exceptions import NoClosedFormError, PreconditionError, ValidationError
from mvcolor.models.coloring import Coloring
from mvcolor.models.ramsey import EdgePartition
from mvcolor.solvers.chromatic import chi_defective1, chi_mu, is_valid_coloring
from mvcolor.solvers.ramsey import rho_with_partition
from mvcolor.suites import GOLDEN_STRONG_8, GOLDEN_STRONG_12, cycle_value, strong_paths_mv_value


class TestCycles:
    """Tests for cycle_imv."""

    @pytest.mark.parametrize("n", range(3, 16))
    def test_class_count(self, n: int) -> None:
        """Test that the construction meets the closed-form value."""
        built = cycle_imv(n)
        assert built.k == cycle_value(n, "imv")
        assert built.claimed_k == built.k
        assert built.mode == "imv"
        assert is_valid_coloring(cycle_graph(n), built.coloring, "imv")

    def test_too_short(self) -> None:
        """Test that cycles need three vertices."""
        with pytest.raises(PreconditionError):
            cycle_imv(2)


class TestStrongGrids:
    """Tests for colorings of strong products of paths."""

    @pytest.mark.parametrize("size, golden", [(12, GOLDEN_STRONG_12), (8, GOLDEN_STRONG_8)])
    def test_golden_schemes(self, size: int, golden) -> None:
        """Test the printed color matrix of the square grids."""
        built = strong_paths_imv(size, size)
        assert render_grid(built.coloring, size, size) == golden
        assert built.k == size // 2

    @pytest.mark.parametrize("t, r", [(3, 3), (9, 5), (7, 7), (16, 8)])
    def test_class_counts(self, t: int, r: int) -> None:
        """Test that the IMV grid coloring uses the claimed number of classes."""
        built = strong_paths_imv(t, r)
        assert built.k <= built.claimed_k
        assert built.claimed_k == (4 if r <= 7 else r // 2)

    def test_no_closed_form(self) -> None:
        """Test that sides that are not multiples of four above seven are refused."""
        with pytest.raises(NoClosedFormError) as info:
            strong_paths_imv(12, 9)
        assert "chimui" in info.value.suggestion

    @pytest.mark.parametrize("t, r", [(2, 2), (3, 5)])
    def test_imv_preconditions(self, t: int, r: int) -> None:
        """Test that the IMV grid needs t >= r >= 3."""
        with pytest.raises(PreconditionError):
            strong_paths_imv(t, r)

    @pytest.mark.parametrize("t, r", [(2, 2), (3, 2), (4, 4), (5, 3), (3, 5), (6, 6)])
    def test_mv_grid(self, t: int, r: int) -> None:
        """Test the MV grid coloring against the closed-form value."""
        assert strong_paths_mv(t, r).k == strong_paths_mv_value(t, r)

    def test_render(self) -> None:
        """Test the 1-based matrix and its text form."""
        coloring = Coloring(assignment=[0, 1, 1, 0, 2, 2])
        assert render_grid(coloring, 2, 3) == [[1, 2, 2], [1, 3, 3]]
        lines = render_grid_text(coloring, 2, 3).splitlines()
        assert [line.split() for line in lines] == [["1", "2", "2"], ["1", "3", "3"]]
        with pytest.raises(PreconditionError):
            render_grid(coloring, 3, 3)


class TestLexicographic:
    """Tests for colorings of lexicographic products."""

    def test_two_mv_classes(self) -> None:
        """Test the two-class MV coloring of P_3 ∘ P_2."""
        built = lex_mv_2coloring(lex(path_graph(3), path_graph(2)))
        assert built.k == 2
        assert built.mode == "mv"

    def test_imv_is_proper(self) -> None:
        """Test that the IMV coloring of P_3 ∘ P_2 is an optimal proper coloring."""
        built = lex_imv(lex(path_graph(3), path_graph(2)))
        assert built.k == 4
        assert built.notes["mu_i"] == 2

    def test_preconditions(self) -> None:
        """Test complete products, non-products and edgeless right factors."""
        with pytest.raises(PreconditionError):
            lex_mv_2coloring(lex(complete_graph(2), complete_graph(2)))
        with pytest.raises(PreconditionError):
            lex_mv_2coloring(path_graph(4))
        with pytest.raises(PreconditionError):
            lex_imv(lex(path_graph(3), Graph(2)))


class TestProducts:
    """Tests for prisms and the χ·χ_μ refinement."""

    def test_prism(self) -> None:
        """Test that G □ K_n needs no more MV classes than an IMV coloring of G."""
        imv = cycle_imv(5).coloring
        for n in (1, 2, 3):
            built = cartesian_prism_mv(cycle_graph(5), n, imv)
            assert built.k == 3
            assert built.coloring.n == 5 * n

    def test_prism_needs_imv(self) -> None:
        """Test that the factor coloring must be IMV."""
        with pytest.raises(PreconditionError):
            cartesian_prism_mv(cycle_graph(5), 2, Coloring.constant(5))

    def test_product_coloring(self) -> None:
        """Test the refinement of an MV coloring into an IMV coloring."""
        g = cycle_graph(6)
        _, mv = chi_mu(g)
        built = product_coloring(g, mv)
        assert built.mode == "imv"
        assert built.k <= built.notes["chi"] * built.notes["mv_classes"]

    def test_product_coloring_needs_mv(self) -> None:
        """Test that the input coloring must be MV."""
        with pytest.raises(PreconditionError):
            product_coloring(path_graph(3), Coloring.constant(3))


class TestTrees:
    """Tests for the exchange procedure on trees."""

    @pytest.mark.parametrize("n", [3, 6, 9])
    def test_exchange_keeps_count(self, n: int) -> None:
        """Test that an optimal MV coloring of a path becomes an IMV coloring of the same size."""
        t = path_graph(n)
        k, start = chi_mu(t)
        built = tree_exchange(t, start)
        assert built.k == k
        assert is_valid_coloring(t, built.coloring, "imv")

    def test_preconditions(self) -> None:
        """Test non-trees, tiny trees and invalid start colorings."""
        with pytest.raises(PreconditionError):
            tree_exchange(cycle_graph(4), Coloring(assignment=[0, 0, 1, 1]))
        with pytest.raises(PreconditionError):
            tree_exchange(path_graph(2), Coloring.constant(2))
        with pytest.raises(PreconditionError):
            tree_exchange(path_graph(6), Coloring.constant(6))


class TestTriangleFree:
    """Tests for the triangle-free construction and its sharpness family."""

    def test_petersen(self, petersen_graph: Graph) -> None:
        """Test the class count on the Petersen graph."""
        built = trianglefree_imv(petersen_graph)
        assert built.notes["mu_i"] == 4
        assert built.k <= 4

    def test_supplied_set(self) -> None:
        """Test a supplied maximum IMV set and a set that is not IMV."""
        g = cycle_graph(6)
        built = trianglefree_imv(g, [0, 2, 4])
        assert built.k <= 3
        with pytest.raises(PreconditionError):
            trianglefree_imv(g, [0, 1])

    def test_needs_triangle_free(self) -> None:
        """Test that a triangle is refused with its vertices."""
        with pytest.raises(PreconditionError) as info:
            trianglefree_imv(complete_graph(3))
        assert "[0, 1, 2]" in info.value.details

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_sharpness(self, k: int) -> None:
        """Test that the sharpness family reaches k + 1 classes."""
        built = sharpness_coloring(k, 2)
        assert built.k == k + 1
        assert built.coloring.n == sharpness_gadget(k, 2).n


class TestDefective:
    """Tests for MV colorings from (k,1)-colorings."""

    def test_petersen(self, petersen_graph: Graph) -> None:
        """Test that a (2,1)-coloring of the Petersen graph is a 2-class MV coloring."""
        _, coloring = chi_defective1(petersen_graph)
        built = defective_to_mv(petersen_graph, coloring)
        assert built.k == 2
        assert built.mode == "mv"

    def test_preconditions(self, petersen_graph: Graph) -> None:
        """Test the diameter requirement and non-defective input."""
        with pytest.raises(PreconditionError):
            defective_to_mv(cycle_graph(6), Coloring(assignment=[0, 0, 1, 1, 0, 0]))
        with pytest.raises(PreconditionError):
            defective_to_mv(petersen_graph, Coloring.constant(10))


class TestSubdivision:
    """Tests for IMV colorings of subdivided complete graphs."""

    def test_from_partition(self) -> None:
        """Test that a K4-free 2-partition of K_4 gives three classes of S(K_4)."""
        _, partition = rho_with_partition(4)
        built = subdiv_imv_from_partition(4, partition)
        assert built.k == 3
        assert is_valid_coloring(subdivision(complete_graph(4)), built.coloring, "imv")

    def test_rejects_k4(self) -> None:
        """Test that a partition with a monochromatic K_4 is rejected."""
        edges = [(u, v, 0) for u in range(4) for v in range(u + 1, 4)]
        partition = EdgePartition(host="complete", sizes=[4], forbidden="K4", edges=edges)
        with pytest.raises(ValidationError):
            subdiv_imv_from_partition(4, partition)

    def test_host_mismatch(self) -> None:
        """Test that the partition must be over K_n."""
        _, partition = rho_with_partition(4)
        with pytest.raises(PreconditionError):
            subdiv_imv_from_partition(5, partition)

"""Tests for the verification suites."""

import pytest

from mvcolor.exceptions import InputError
from mvcolor.suites import (
    SUITES,
    cycle_value,
    run_suite,
    strong_paths_mv_value,
    suite_names,
)


class TestRegistry:
    """Tests for suite registration and lookup."""

    def test_names(self) -> None:
        """Test that every suite is listed, with ``all`` last."""
        names = suite_names()
        assert names[-1] == "all"
        assert set(names[:-1]) == set(SUITES)
        for expected in ("cycles", "paths", "strong", "ramsey", "hardness", "oracle"):
            assert expected in SUITES

    def test_unknown_suite(self) -> None:
        """Test that an unknown suite name is an input error."""
        with pytest.raises(InputError) as info:
            run_suite("nope")
        assert "cycles" in info.value.suggestion


class TestClosedForms:
    """Tests for the closed-form values the suites compare against."""

    @pytest.mark.parametrize(
        "n, imv, mv", [(3, 3, 1), (4, 2, 2), (5, 3, 2), (6, 2, 2), (7, 3, 3), (12, 4, 4)]
    )
    def test_cycle_value(self, n: int, imv: int, mv: int) -> None:
        """Test the MV and IMV values of cycles."""
        assert cycle_value(n, "imv") == imv
        assert cycle_value(n, "mv") == mv

    @pytest.mark.parametrize("t, r, value", [(2, 2, 1), (5, 2, 2), (3, 3, 2), (7, 5, 3)])
    def test_strong_paths_mv_value(self, t: int, r: int, value: int) -> None:
        """Test the MV value of strong grids."""
        assert strong_paths_mv_value(t, r) == value


class TestRunSuite:
    """Tests for running suites."""

    @pytest.mark.parametrize("name", ["paths", "ramsey"])
    def test_suite_passes(self, name: str) -> None:
        """Test that a quick suite passes every check."""
        reports = run_suite(name)
        assert [r.suite for r in reports] == [name]
        report = reports[0]
        assert report.checks
        assert report.passed, [c.model_dump() for c in report.failures]
        assert report.elapsed_seconds >= 0

    @pytest.mark.slow
    def test_all_suites(self) -> None:
        """Test that every suite passes."""
        reports = run_suite("all")
        assert [r.suite for r in reports] == list(SUITES)
        assert all(r.passed for r in reports), [
            (r.suite, [c.name for c in r.failures]) for r in reports if not r.passed
        ]

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "name",
        [
            "cycles",
            "trees",
            "bounds",
            "diameter",
            "characterization",
            "lexicographic",
            "subdivision",
            "strong",
            "cartesian",
            "hardness",
            "trianglefree",
            "oracle",
        ],
    )
    def test_full_scale_suite(self, name: str) -> None:
        """Test each acceptance suite on its full corpus."""
        report = run_suite(name)[0]
        assert report.passed, [c.model_dump() for c in report.failures]

    @pytest.mark.slow
    def test_subdivision_checks(self) -> None:
        """Test that K_5, K_6 and every K_{r,s} with r, s <= 3 are checked."""
        names = [c.name for c in run_suite("subdivision")[0].checks]
        assert "sandwich S(K_6)" in names
        assert "lower chain S(K_1,3)" in names
        assert "sandwich S(K_3,3)" in names

    @pytest.mark.slow
    def test_strong_grid_value(self) -> None:
        """Test that the strong suite checks χ_μᵢ(P_8 ⊠ P_8) = 4 and grids up to P_6 ⊠ P_6."""
        checks = {c.name: c for c in run_suite("strong")[0].checks}
        assert checks["chi_mu_i(P_8 x P_8)"].passed
        assert checks["chi_mu(P_6 x P_6)"].passed

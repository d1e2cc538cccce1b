"""Tests for the command-line interface."""

import json
from pathlib import Path
from typing import Any, Callable, Dict

import pytest
import yaml
from click.testing import CliRunner

from mvcolor import __version__
from mvcolor.cli import cli
from mvcolor.suites import GOLDEN_STRONG_12


@pytest.fixture(autouse=True)
def isolated_home(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Keep local and global config files out of the tests."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("HOME", str(tmp_path))
    return tmp_path


def record(result) -> Dict[str, Any]:
    return json.loads(result.stdout)


class TestGraphCommands:
    """Tests for build, stats and export."""

    def test_build(self, runner: CliRunner) -> None:
        """Test that build prints the edge list."""
        result = runner.invoke(cli, ["build", "cycle:4"])
        assert result.exit_code == 0
        assert result.stdout == "4 4\n0 1\n0 3\n1 2\n2 3\n"

    def test_build_to_file(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test writing the edge list to a file that stats can read back."""
        target = tmp_path / "grid.txt"
        result = runner.invoke(cli, ["build", "strong(path:2,path:3)", "-o", str(target)])
        assert result.exit_code == 0
        assert target.read_text().startswith("6 11\n")

        result = runner.invoke(cli, ["stats", str(target)])
        assert record(result)["values"]["m"] == 11

    def test_stats(self, runner: CliRunner) -> None:
        """Test the statistics record of the Petersen graph."""
        result = runner.invoke(cli, ["stats", "petersen"])
        assert result.exit_code == 0
        data = record(result)
        assert data["command"] == "stats"
        assert data["values"]["n"] == 10
        assert data["values"]["diameter"] == 2
        assert data["values"]["alpha"] == 4
        assert data["provenance"]["alpha"] == "exact"
        assert len(data["witnesses"]["alpha"]) == 4

    def test_export_dot(self, runner: CliRunner, write_json: Callable[[str, Any], str]) -> None:
        """Test DOT export with a coloring."""
        path = write_json("c.json", {"classes": [[0, 2], [1]]})
        result = runner.invoke(cli, ["export", "path:3", "--dot", "--coloring", path])
        assert result.exit_code == 0
        assert "0 -- 1;" in result.stdout
        assert "colorscheme=set312" in result.stdout
        assert "1 [color=2];" in result.stdout

    def test_bad_spec(self, runner: CliRunner) -> None:
        """Test that an unknown family exits with the input error code."""
        result = runner.invoke(cli, ["stats", "nope:3"])
        assert result.exit_code == 4


class TestSolve:
    """Tests for the solve command."""

    def test_chi_mu_i(self, runner: CliRunner) -> None:
        """Test χ_μᵢ(C_9) with its classes."""
        result = runner.invoke(cli, ["solve", "cycle:9", "-p", "chimui"])
        assert result.exit_code == 0
        data = record(result)
        assert data["values"]["chimui"] == 3
        assert len(data["witnesses"]["classes"]) == 3

    def test_mu(self, runner: CliRunner) -> None:
        """Test μ with its set witness."""
        result = runner.invoke(cli, ["solve", "complete:4", "--param", "mu"])
        assert record(result)["values"]["mu"] == 4
        assert record(result)["witnesses"]["set"] == [0, 1, 2, 3]

    def test_no_shortcuts(self, runner: CliRunner) -> None:
        """Test that the plain search gives the same value."""
        result = runner.invoke(cli, ["solve", "cycle:5", "-p", "chimui", "--no-shortcuts"])
        assert record(result)["values"]["chimui"] == 3

    def test_disconnected(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that visibility invariants refuse a disconnected graph."""
        path = tmp_path / "two.txt"
        path.write_text("3 1\n0 1\n")
        result = runner.invoke(cli, ["solve", str(path), "-p", "mu"])
        assert result.exit_code == 4

    def test_node_budget(self, runner: CliRunner) -> None:
        """Test that an exhausted budget exits with code 3."""
        result = runner.invoke(cli, ["--node-budget", "1", "solve", "cycle:12", "-p", "mu"])
        assert result.exit_code == 3

    def test_output_formats(self, runner: CliRunner) -> None:
        """Test YAML and table output."""
        result = runner.invoke(cli, ["--output-format", "yaml", "stats", "path:3"])
        assert yaml.safe_load(result.stdout)["values"]["n"] == 3

        result = runner.invoke(cli, ["--output-format", "table", "stats", "path:3"])
        assert result.exit_code == 0
        assert "provenance" in result.stdout


class TestColor:
    """Tests for the color command."""

    def test_strong_grid(self, runner: CliRunner) -> None:
        """Test the 12 x 12 IMV grid scheme."""
        result = runner.invoke(
            cli, ["color", "strong(path:12,path:12)", "--theorem", "strongpaths-imv"]
        )
        assert result.exit_code == 0
        data = record(result)
        assert data["values"]["classes"] == 6
        assert data["provenance"]["classes"] == "constructed"
        assert data["witnesses"]["grid"] == GOLDEN_STRONG_12
        assert data["status"] == "ok"

    def test_grid_text(self, runner: CliRunner) -> None:
        """Test that --grid appends the matrix after the record."""
        result = runner.invoke(
            cli, ["color", "strong(path:4,path:3)", "-t", "strongpaths-mv", "--grid"]
        )
        assert result.exit_code == 0
        assert result.stdout.rstrip().splitlines()[-1].split()[0] == "1"

    def test_cycle(self, runner: CliRunner) -> None:
        """Test the cycle construction."""
        result = runner.invoke(cli, ["color", "cycle:10", "-t", "cycle-imv"])
        assert record(result)["values"]["classes"] == 4

    def test_wrong_family(self, runner: CliRunner) -> None:
        """Test that a construction refuses the wrong kind of graph."""
        result = runner.invoke(cli, ["color", "petersen", "-t", "strongpaths-imv"])
        assert result.exit_code == 4

    def test_no_closed_form(self, runner: CliRunner) -> None:
        """Test a grid side with no closed form."""
        result = runner.invoke(cli, ["color", "strong(path:9,path:9)", "-t", "strongpaths-imv"])
        assert result.exit_code == 4


class TestCheck:
    """Tests for check and check-set."""

    def test_valid_coloring(self, runner: CliRunner, write_json: Callable[[str, Any], str]) -> None:
        """Test a valid IMV coloring of C_4."""
        path = write_json("c4.json", {"classes": [[0, 2], [1, 3]]})
        result = runner.invoke(cli, ["check", "cycle:4", "--coloring", path, "--mode", "imv"])
        assert result.exit_code == 0
        assert record(result)["values"]["valid"] is True

    def test_invalid_coloring(
        self, runner: CliRunner, write_json: Callable[[str, Any], str]
    ) -> None:
        """Test that an invalid coloring is reported and exits 2."""
        path = write_json("p3.json", {"assignment": [0, 0, 0]})
        result = runner.invoke(cli, ["check", "path:3", "--coloring", path, "-m", "mv"])
        assert result.exit_code == 2
        data = record(result)
        assert data["status"] == "invalid"
        assert data["witnesses"]["violation"]["vertices"] == [0, 2]

    def test_set(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test an IMV set given as whitespace-separated integers."""
        path = tmp_path / "s.txt"
        path.write_text("0 2 4\n")
        result = runner.invoke(cli, ["check-set", "cycle:6", "--set", str(path), "-m", "imv"])
        assert result.exit_code == 0
        assert record(result)["values"]["size"] == 3

    def test_invisible_set(self, runner: CliRunner, write_json: Callable[[str, Any], str]) -> None:
        """Test that a blocked pair is reported and exits 2."""
        path = write_json("s.json", [0, 1, 2])
        result = runner.invoke(cli, ["check-set", "path:3", "--set", path])
        assert result.exit_code == 2
        assert record(result)["witnesses"]["invisible_pair"] == [0, 2]


class TestRho:
    """Tests for the rho command."""

    def test_complete(self, runner: CliRunner) -> None:
        """Test ρ(4) with its partition."""
        result = runner.invoke(cli, ["rho", "4"])
        assert result.exit_code == 0
        data = record(result)
        assert data["values"]["rho"] == 2
        assert data["witnesses"]["partition"]["host"] == "complete"

    def test_biclique(self, runner: CliRunner) -> None:
        """Test ρ(2, 2)."""
        assert record(runner.invoke(cli, ["rho", "2,2"]))["values"]["rho"] == 2

    def test_bounds_beyond_limit(self, runner: CliRunner) -> None:
        """Test that K_13 falls back to the Ramsey bounds."""
        data = record(runner.invoke(cli, ["rho", "13"]))
        assert data["values"] == {"rho_lower": 2, "rho_upper": 2}
        assert data["provenance"]["rho_lower"] == "bound"

    def test_sandwich(self, runner: CliRunner) -> None:
        """Test the sandwich values for K_3."""
        data = record(runner.invoke(cli, ["rho", "3", "--sandwich"]))
        assert data["values"]["chi_mu_i"] == 2
        assert data["values"]["meets_rho_plus_one"] is True
        assert data["values"]["sandwich_holds"] is True
        assert data["status"] == "ok"

    def test_biclique_sandwich(self, runner: CliRunner) -> None:
        """Test that the star K_{1,2} is reported against the lower chain only."""
        data = record(runner.invoke(cli, ["rho", "1,2", "--sandwich"]))
        assert data["values"]["upper_asserted"] is False
        assert data["values"]["sandwich_holds"] is True

    @pytest.mark.parametrize("sizes", ["x", "1,2,3", "0"])
    def test_bad_sizes(self, runner: CliRunner, sizes: str) -> None:
        """Test malformed sizes."""
        assert runner.invoke(cli, ["rho", sizes]).exit_code == 4


class TestGadget:
    """Tests for the gadget commands."""

    def test_sat_figure(self, runner: CliRunner) -> None:
        """Test the structural check of the drawn gadget."""
        result = runner.invoke(cli, ["gadget", "sat", "--figure"])
        assert result.exit_code == 0
        data = record(result)
        assert data["values"]["order"] == 32
        assert data["values"]["structure_ok"] is True

    def test_sat_verify(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test verifying a formula read from DIMACS."""
        path = tmp_path / "f.cnf"
        path.write_text("p cnf 2 1\n1 2 0\n")
        result = runner.invoke(cli, ["gadget", "sat", str(path), "--verify"])
        assert result.exit_code == 0
        data = record(result)
        assert data["values"]["reduction_holds"] is True
        assert data["values"]["mu_i"] == data["values"]["alpha"]

    def test_sat_needs_one_source(self, runner: CliRunner) -> None:
        """Test that neither a file nor --figure is an input error."""
        assert runner.invoke(cli, ["gadget", "sat"]).exit_code == 4

    def test_corona(self, runner: CliRunner) -> None:
        """Test the corona reduction on C_5."""
        result = runner.invoke(cli, ["gadget", "corona", "cycle:5", "--verify"])
        assert result.exit_code == 0
        data = record(result)
        assert data["values"]["mu_i"] == 2
        assert data["values"]["chi_mu_i"] == 4
        assert data["values"]["reduction_holds"] is True


class TestVerifyAndSchema:
    """Tests for verify and schema."""

    def test_verify_suite(self, runner: CliRunner) -> None:
        """Test one quick suite."""
        result = runner.invoke(cli, ["verify", "--suite", "paths"])
        assert result.exit_code == 0
        reports = json.loads(result.stdout)
        assert reports[0]["suite"] == "paths"
        assert reports[0]["passed"] is True

    def test_verify_table(self, runner: CliRunner) -> None:
        """Test the table summary line."""
        result = runner.invoke(cli, ["--output-format", "table", "verify", "-s", "paths"])
        assert "1/1 suites passed" in result.stdout

    def test_schema(self, runner: CliRunner) -> None:
        """Test that the schema describes the record."""
        result = runner.invoke(cli, ["schema"])
        assert "witnesses" in json.loads(result.stdout)["properties"]


class TestConfigCommands:
    """Tests for the config group and global options."""

    def test_version(self, runner: CliRunner) -> None:
        """Test the version option."""
        result = runner.invoke(cli, ["--version"])
        assert __version__ in result.stdout

    def test_init_set_get(self, runner: CliRunner, isolated_home: Path) -> None:
        """Test creating, changing and reading the local config."""
        assert runner.invoke(cli, ["config", "init"]).exit_code == 0
        assert (isolated_home / ".mvcolor" / "config.yaml").exists()
        assert runner.invoke(cli, ["config", "set", "search.node_budget", "5000"]).exit_code == 0
        result = runner.invoke(cli, ["config", "get", "search.node_budget"])
        assert result.stdout.strip() == "5000"

    def test_set_invalid(self, runner: CliRunner) -> None:
        """Test that invalid values exit with the config error code."""
        result = runner.invoke(cli, ["config", "set", "defaults.output_format", "xml"])
        assert result.exit_code == 1

    def test_show_json(self, runner: CliRunner) -> None:
        """Test showing the configuration as JSON."""
        result = runner.invoke(cli, ["config", "show", "--format", "json"])
        assert json.loads(result.stdout)["search"]["ramsey_max_complete"] == 12

    def test_env_budget(self, runner: CliRunner, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test the node budget environment variable."""
        monkeypatch.setenv("MV_NODE_BUDGET", "1")
        result = runner.invoke(cli, ["solve", "cycle:12", "-p", "mu"])
        assert result.exit_code == 3

"""Tests for loading vertex sets, colorings and formulas from files."""

from pathlib import Path

import pytest

from mvcolor.builders.families import cycle_graph
from mvcolor.exceptions import InputError, ParseError
from mvcolor.utils.inputs import load_cnf, load_coloring, load_vertex_set


class TestLoadVertexSet:
    """Tests for load_vertex_set."""

    def test_json_list(self, tmp_path: Path) -> None:
        """Test a JSON list, returned sorted."""
        path = tmp_path / "s.json"
        path.write_text("[4, 0, 2]")
        assert load_vertex_set(str(path), cycle_graph(6)) == [0, 2, 4]

    def test_plain_integers(self, tmp_path: Path) -> None:
        """Test whitespace-separated integers."""
        path = tmp_path / "s.txt"
        path.write_text("1\n3 5\n")
        assert load_vertex_set(str(path), cycle_graph(6)) == [1, 3, 5]

    def test_unreadable_path(self, tmp_path: Path) -> None:
        """Test that a directory is reported as an input error, not an OSError."""
        with pytest.raises(InputError, match="Cannot read"):
            load_vertex_set(str(tmp_path), cycle_graph(6))

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test that a missing file is reported as an input error."""
        with pytest.raises(InputError, match="Cannot read"):
            load_vertex_set(str(tmp_path / "absent.txt"), cycle_graph(6))

    def test_garbage(self, tmp_path: Path) -> None:
        """Test that text that is neither JSON nor integers is a parse error."""
        path = tmp_path / "s.txt"
        path.write_text("zero two")
        with pytest.raises(ParseError):
            load_vertex_set(str(path), cycle_graph(6))

    @pytest.mark.parametrize("text, message", [("[0, 6]", "out of range"), ("[1, 1]", "twice")])
    def test_bad_members(self, tmp_path: Path, text: str, message: str) -> None:
        """Test out-of-range and repeated vertices."""
        path = tmp_path / "s.json"
        path.write_text(text)
        with pytest.raises(InputError, match=message):
            load_vertex_set(str(path), cycle_graph(6))


class TestOtherLoaders:
    """Tests for the coloring and formula loaders on unreadable paths."""

    def test_coloring_directory(self, tmp_path: Path) -> None:
        """Test that a directory given as a coloring is an input error."""
        with pytest.raises(InputError, match="Cannot read"):
            load_coloring(str(tmp_path), cycle_graph(4))

    def test_cnf_missing(self, tmp_path: Path) -> None:
        """Test that a missing formula file is an input error."""
        with pytest.raises(InputError, match="Cannot read"):
            load_cnf(str(tmp_path / "absent.cnf"))

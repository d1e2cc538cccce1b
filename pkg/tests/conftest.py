"""Pytest fixtures for mvcolor tests."""

import json
import tempfile
from pathlib import Path
from typing import Any, Callable, Generator

import pytest
from click.testing import CliRunner

from mvcolor.builders.families import cycle_graph, path_graph, petersen
from mvcolor.config import MvColorConfig
from mvcolor.core.budget import NodeBudget
from mvcolor.core.graph import Graph


@pytest.fixture
def sample_config() -> MvColorConfig:
    """Create a sample configuration for testing."""
    return MvColorConfig()


@pytest.fixture
def temp_config_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for config files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def temp_config_file(temp_config_dir: Path) -> Path:
    """Create a temporary config file path."""
    return temp_config_dir / ".mvcolor" / "config.yaml"


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Clean environment variables that affect config."""
    env_vars = [
        "MV_NODE_BUDGET",
        "MVCOLOR_OUTPUT_FORMAT",
        "MVCOLOR_LOG_LEVEL",
    ]
    for var in env_vars:
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def budget() -> NodeBudget:
    """A generous node budget shared by one test."""
    return NodeBudget(10**7, label="test")


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def petersen_graph() -> Graph:
    return petersen()


@pytest.fixture
def runner(clean_env: None) -> CliRunner:
    """Click runner with stderr kept apart from the JSON on stdout."""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 always separates the streams
        return CliRunner()


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], str]:
    """Write a JSON document under tmp_path and return its path."""

    def write(name: str, data: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write

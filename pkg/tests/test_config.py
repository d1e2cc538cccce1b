"""Tests for configuration management."""

from pathlib import Path

import pytest

from mvcolor.config import (
    DefaultsConfig,
    LoggingConfig,
    MvColorConfig,
    SearchConfig,
    get_config,
)
from mvcolor.core.budget import DEFAULT_NODE_BUDGET
from mvcolor.exceptions import ConfigError


class TestSearchConfig:
    """Tests for SearchConfig."""

    def test_default_values(self) -> None:
        """Test default search limits."""
        config = SearchConfig()
        assert config.node_budget == DEFAULT_NODE_BUDGET
        assert config.ramsey_max_complete == 12
        assert config.ramsey_max_biclique_edges == 36
        assert config.sat_max_vars == 3
        assert config.sat_max_clauses == 4
        assert config.brute_force_max_order == 7

    def test_rejects_non_positive_budget(self) -> None:
        """Test that a zero node budget is refused."""
        with pytest.raises(ValueError):
            SearchConfig(node_budget=0)


class TestDefaultsConfig:
    """Tests for DefaultsConfig."""

    def test_default_values(self) -> None:
        """Test default configuration values."""
        config = DefaultsConfig()
        assert config.output_format == "json"

    def test_unknown_format(self) -> None:
        """Test that unknown output formats are refused."""
        with pytest.raises(ValueError):
            DefaultsConfig(output_format="xml")


class TestLoggingConfig:
    """Tests for LoggingConfig."""

    def test_default_values(self) -> None:
        """Test default logging configuration values."""
        assert LoggingConfig().level == "warning"

    def test_level_is_lowercased(self) -> None:
        """Test that levels are normalized to lower case."""
        assert LoggingConfig(level="DEBUG").level == "debug"


class TestMvColorConfig:
    """Tests for MvColorConfig."""

    def test_default_values(self, sample_config: MvColorConfig) -> None:
        """Test default configuration values."""
        assert sample_config.version == "1.0"
        assert isinstance(sample_config.search, SearchConfig)
        assert isinstance(sample_config.defaults, DefaultsConfig)
        assert isinstance(sample_config.logging, LoggingConfig)

    def test_get_nested_value(self, sample_config: MvColorConfig) -> None:
        """Test getting nested configuration values."""
        assert sample_config.get("search.ramsey_max_complete") == 12
        assert sample_config.get("defaults.output_format") == "json"
        assert sample_config.get("logging.level") == "warning"

    def test_get_missing_value_with_default(self, sample_config: MvColorConfig) -> None:
        """Test getting missing configuration values with default."""
        assert sample_config.get("nonexistent.key", "default") == "default"
        assert sample_config.get("search.nonexistent", 123) == 123

    def test_set_nested_value(self, sample_config: MvColorConfig) -> None:
        """Test setting nested configuration values."""
        sample_config.set("search.node_budget", 5000)
        assert sample_config.search.node_budget == 5000

        sample_config.set("defaults.output_format", "yaml")
        assert sample_config.defaults.output_format == "yaml"

    def test_set_unknown_key(self, sample_config: MvColorConfig) -> None:
        """Test that unknown keys raise ConfigError."""
        with pytest.raises(ConfigError):
            sample_config.set("search.nonexistent", 1)
        with pytest.raises(ConfigError):
            sample_config.set("search", 1)

    def test_set_invalid_value(self, sample_config: MvColorConfig) -> None:
        """Test that values failing validation raise ConfigError."""
        with pytest.raises(ConfigError):
            sample_config.set("defaults.output_format", "xml")

    def test_load_nonexistent_file(self) -> None:
        """Test loading configuration from nonexistent file returns defaults."""
        config = MvColorConfig.load(Path("/nonexistent/path/config.yaml"))
        assert config.version == "1.0"
        assert config.search.node_budget == DEFAULT_NODE_BUDGET

    def test_save_and_load(self, temp_config_file: Path) -> None:
        """Test saving and loading configuration."""
        config = MvColorConfig()
        config.set("search.node_budget", 4242)
        config.set("logging.level", "info")

        config.save(temp_config_file)

        loaded_config = MvColorConfig.load(temp_config_file)
        assert loaded_config.search.node_budget == 4242
        assert loaded_config.logging.level == "info"

    def test_load_invalid_yaml(self, temp_config_file: Path) -> None:
        """Test that malformed YAML raises ConfigError."""
        temp_config_file.parent.mkdir(parents=True)
        temp_config_file.write_text("search: [unclosed\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            MvColorConfig.load(temp_config_file)

    def test_load_invalid_values(self, temp_config_file: Path) -> None:
        """Test that a schema violation raises ConfigError."""
        temp_config_file.parent.mkdir(parents=True)
        temp_config_file.write_text("search:\n  node_budget: -5\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            MvColorConfig.load(temp_config_file)

    def test_model_dump(self, sample_config: MvColorConfig) -> None:
        """Test model_dump returns correct dictionary."""
        data = sample_config.model_dump()
        assert "version" in data
        assert "search" in data
        assert "defaults" in data
        assert "logging" in data
        assert isinstance(data["search"], dict)


class TestGetConfig:
    """Tests for get_config function."""

    def test_returns_config_instance(self, clean_env: None) -> None:
        """Test that get_config returns MvColorConfig instance."""
        config = get_config()
        assert isinstance(config, MvColorConfig)

    def test_with_custom_path(self, clean_env: None, temp_config_file: Path) -> None:
        """Test get_config with custom path."""
        config = MvColorConfig()
        config.set("search.sat_max_vars", 2)
        config.save(temp_config_file)

        loaded_config = get_config(temp_config_file)
        assert loaded_config.search.sat_max_vars == 2

    def test_env_override_budget(self, clean_env: None, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test environment variable override for the node budget."""
        monkeypatch.setenv("MV_NODE_BUDGET", "777")
        config = get_config()
        assert config.search.node_budget == 777

    def test_env_override_output_format(
        self, clean_env: None, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test environment variable override for output format."""
        monkeypatch.setenv("MVCOLOR_OUTPUT_FORMAT", "yaml")
        config = get_config()
        assert config.defaults.output_format == "yaml"

    def test_env_override_invalid(self, clean_env: None, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that a malformed override raises ConfigError."""
        monkeypatch.setenv("MV_NODE_BUDGET", "lots")
        with pytest.raises(ConfigError):
            get_config()

"""Configuration management for mvcolor."""

import os
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from mvcolor.core.budget import BUDGET_ENV, DEFAULT_NODE_BUDGET
from mvcolor.exceptions import ConfigError

OUTPUT_FORMATS = ("json", "table", "yaml")
LOG_LEVELS = ("debug", "info", "warning", "error")


class SearchConfig(BaseModel):
    """Budgets and desk-scale limits of the exhaustive searches."""

    model_config = ConfigDict(validate_assignment=True)

    node_budget: int = Field(DEFAULT_NODE_BUDGET, gt=0)
    ramsey_max_complete: int = Field(12, ge=2)
    ramsey_max_biclique_edges: int = Field(36, ge=1)
    sat_max_vars: int = Field(3, ge=1)
    sat_max_clauses: int = Field(4, ge=1)
    brute_force_max_order: int = Field(7, ge=1)


class DefaultsConfig(BaseModel):
    """Default settings."""

    model_config = ConfigDict(validate_assignment=True)

    output_format: str = "json"

    @field_validator("output_format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be one of {', '.join(OUTPUT_FORMATS)}")
        return value


class LoggingConfig(BaseModel):
    """Logging configuration."""

    model_config = ConfigDict(validate_assignment=True)

    level: str = "warning"

    @field_validator("level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.lower()
        if value not in LOG_LEVELS:
            raise ValueError(f"level must be one of {', '.join(LOG_LEVELS)}")
        return value


class MvColorConfig(BaseModel):
    """Main configuration class."""

    version: str = "1.0"
    search: SearchConfig = Field(default_factory=SearchConfig)
    defaults: DefaultsConfig = Field(default_factory=DefaultsConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    @classmethod
    def load(cls, config_path: Optional[Path] = None) -> "MvColorConfig":
        """Load configuration from file.

        Args:
            config_path: Explicit configuration file path.
                        If not provided, searches in default locations.

        Returns:
            MvColorConfig instance
        """
        if config_path:
            if config_path.exists():
                return cls._load_from_file(config_path)
            return cls()

        search_paths = [
            Path(".mvcolor/config.yaml"),
            Path(".mvcolor/config.yml"),
            Path.home() / ".mvcolor/config.yaml",
            Path.home() / ".mvcolor/config.yml",
        ]

        for path in search_paths:
            if path.exists():
                return cls._load_from_file(path)

        return cls()

    @classmethod
    def _load_from_file(cls, path: Path) -> "MvColorConfig":
        """Load configuration from YAML file."""
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
            return cls(**data)
        except yaml.YAMLError as e:
            raise ConfigError(f"Cannot parse {path}", details=str(e)) from None
        except ValidationError as e:
            raise ConfigError(f"Invalid configuration in {path}", details=str(e)) from None

    def save(self, path: Optional[Path] = None, global_config: bool = False) -> None:
        """Save configuration to file.

        Args:
            path: Explicit configuration file path.
            global_config: If True, save to global config location.
        """
        if path is None:
            if global_config:
                path = Path.home() / ".mvcolor/config.yaml"
            else:
                path = Path(".mvcolor/config.yaml")

        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w", encoding="utf-8") as f:
            yaml.dump(self.model_dump(), f, default_flow_style=False, sort_keys=False)

    def get_env_overrides(self) -> None:
        """Apply environment variable overrides."""
        try:
            if budget := os.getenv(BUDGET_ENV):
                self.search.node_budget = int(budget)
            if output_format := os.getenv("MVCOLOR_OUTPUT_FORMAT"):
                self.defaults.output_format = output_format
            if level := os.getenv("MVCOLOR_LOG_LEVEL"):
                self.logging.level = level
        except (ValueError, ValidationError) as e:
            raise ConfigError("Invalid environment override", details=str(e)) from None

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by dot-notation key.

        Args:
            key: Dot-notation key (e.g., 'search.node_budget')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        keys = key.split(".")
        value = self.model_dump()
        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """Set configuration value by dot-notation key.

        Args:
            key: Dot-notation key (e.g., 'search.node_budget')
            value: Value to set
        """
        keys = key.split(".")
        current: Any = self
        try:
            for k in keys[:-1]:
                current = getattr(current, k)
            if not hasattr(current, keys[-1]) or isinstance(getattr(current, keys[-1]), BaseModel):
                raise ConfigError(f"Unknown configuration key '{key}'")
            setattr(current, keys[-1], value)
        except AttributeError:
            raise ConfigError(f"Unknown configuration key '{key}'") from None
        except ValidationError as e:
            raise ConfigError(f"Invalid value for '{key}'", details=str(e)) from None


def get_config(config_path: Optional[Path] = None) -> MvColorConfig:
    """Get configuration instance with environment overrides applied.

    Args:
        config_path: Optional explicit configuration file path.

    Returns:
        MvColorConfig instance
    """
    config = MvColorConfig.load(config_path)
    config.get_env_overrides()
    return config

"""
Configuration management for molkit.

This module provides functionality for loading and managing configuration
from YAML/JSON files and environment variables.
"""

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from src.core.constants import (
    CONFIG_DEFAULTS_DIR,
    DEFAULT_CHAIN_CAP,
    DEFAULT_CLOSURE_CAP,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    DEFAULT_SUBSPACE_LATTICE_BOUND,
    ENV_PREFIX,
    SAMPLE_ENTRY_RANGE,
)
from src.core.exceptions import ConfigurationError

_REPO_ROOT = Path(__file__).resolve().parents[2]


class Settings:
    """
    Settings manager for molkit.

    This class loads and manages configuration from YAML files and environment
    variables. ``MOLKIT_<OPTION>`` variables land in the ``molkit`` section;
    ``MOLKIT_CAP`` overrides every closure cap.
    """

    _instance = None

    @classmethod
    def get_instance(cls) -> "Settings":
        """Get or create the singleton instance."""
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset_instance(cls) -> None:
        """Drop the singleton so the next access reloads files and environment."""
        cls._instance = None

    def __init__(self, config_dir: Optional[str] = None):
        """Initialize the settings manager."""
        self.config: Dict[str, Any] = {}
        self._load_defaults(config_dir)
        self._load_environment()

    def _load_defaults(self, config_dir: Optional[str] = None) -> None:
        """Load default configuration from YAML files."""
        directory = Path(config_dir) if config_dir else _REPO_ROOT / CONFIG_DEFAULTS_DIR
        if not directory.is_dir():
            return

        for path in sorted(directory.iterdir()):
            if path.suffix not in ('.yaml', '.yml'):
                continue
            try:
                with open(path, 'r') as f:
                    self.config[path.stem] = yaml.safe_load(f) or {}
            except Exception as e:
                raise ConfigurationError(f"Error loading config file {path}: {e}")

    def _load_environment(self) -> None:
        """Load configuration from environment variables."""
        load_dotenv()  # Load .env file if present

        # Example: MOLKIT_CAP -> config['molkit']['cap']
        for key, value in os.environ.items():
            if key.startswith(ENV_PREFIX) and len(key) > len(ENV_PREFIX):
                option = key[len(ENV_PREFIX):].lower()
                self.config.setdefault('molkit', {})[option] = value

    def get(self, section: str, option: str, default: Any = None) -> Any:
        """Get a configuration value."""
        section_values = self.config.get(section) or {}
        if not isinstance(section_values, dict):
            return default
        return section_values.get(option, default)

    def set(self, section: str, option: str, value: Any) -> None:
        """Set a configuration value."""
        self.config.setdefault(section, {})[option] = value

    @classmethod
    def from_file(cls, filepath: str) -> "Settings":
        """
        Create a Settings instance from a configuration file.

        Args:
            filepath: Path to a YAML or JSON configuration file

        Returns:
            Settings instance with the file merged over the defaults
        """
        instance = cls()

        if not os.path.isfile(filepath):
            raise ConfigurationError(f"Config file not found: {filepath}")

        _, ext = os.path.splitext(filepath)
        try:
            with open(filepath, 'r') as f:
                if ext.lower() in ('.yaml', '.yml'):
                    config_data = yaml.safe_load(f)
                elif ext.lower() == '.json':
                    config_data = json.load(f)
                else:
                    raise ConfigurationError(f"Unsupported config format: {filepath}")
        except ConfigurationError:
            raise
        except Exception as e:
            raise ConfigurationError(f"Error loading config file {filepath}: {e}")

        if not isinstance(config_data, dict):
            raise ConfigurationError(f"Invalid config format in {filepath}")

        for section, values in config_data.items():
            if isinstance(values, dict):
                instance.config.setdefault(section, {}).update(values)
            else:
                instance.config[section] = values
        return instance

    def _int(self, section: str, option: str, default: int) -> int:
        value = self.get(section, option, default)
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigurationError(f"{section}.{option} must be an integer, got {value!r}")

    def get_limits(self) -> Dict[str, int]:
        """
        Get iteration caps and materialization bounds.

        Returns:
            Dictionary with ``closure_cap``, ``chain_cap`` and
            ``subspace_lattice_bound``
        """
        limits = {
            'closure_cap': self._int('limits', 'closure_cap', DEFAULT_CLOSURE_CAP),
            'chain_cap': self._int('limits', 'chain_cap', DEFAULT_CHAIN_CAP),
            'subspace_lattice_bound': self._int(
                'limits', 'subspace_lattice_bound', DEFAULT_SUBSPACE_LATTICE_BOUND),
        }
        if self.get('molkit', 'cap') is not None:
            cap = self._int('molkit', 'cap', DEFAULT_CLOSURE_CAP)
            limits['closure_cap'] = cap
            limits['chain_cap'] = cap
        return limits

    def get_sampling_params(self) -> Dict[str, int]:
        """
        Get sampling parameters.

        Returns:
            Dictionary with ``count``, ``entry_range`` and ``seed``
        """
        params = {
            'count': self._int('sampling', 'count', DEFAULT_SAMPLE_COUNT),
            'entry_range': self._int('sampling', 'entry_range', SAMPLE_ENTRY_RANGE),
            'seed': self._int('sampling', 'seed', DEFAULT_SEED),
        }
        if self.get('molkit', 'seed') is not None:
            params['seed'] = self._int('molkit', 'seed', DEFAULT_SEED)
        return params

    def get_logging_params(self) -> Dict[str, Any]:
        """
        Get logging parameters.

        Returns:
            Dictionary with ``level`` and ``file_logging``
        """
        params = dict(self.config.get('logging') or {})
        params.setdefault('level', 'WARNING')
        params.setdefault('file_logging', False)
        return params

"""
Configuration handling for cornerforge.
"""

import copy
import json
import logging
import os
from typing import Dict, Any, Optional

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = 'CORNERFORGE_THREADS'


class Config:
    """Configuration manager for cornerforge runs."""

    DEFAULT_CONFIG = {
        'threads': 1,
        'enumeration': {
            'max_points': 1_000_000
        },
        'verify': {
            'parallel_min_rows': 64
        },
        'behrend': {
            'check_limit': 2000,
            'd_span': 3,
            'work_limit': 5_000_000
        },
        'oracle': {
            'max_n': 6
        },
        'report': {
            'significant_digits': 6
        }
    }

    def __init__(self, config_file: Optional[str] = None,
                 environ: Optional[Dict[str, str]] = None):
        """
        Initialize configuration.

        Args:
            config_file: Path to a JSON configuration file (optional)
            environ: Environment mapping to read overrides from (defaults to os.environ)
        """
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        self.config_file = config_file

        if config_file:
            if os.path.exists(config_file):
                self.load_from_file(config_file)
            else:
                logger.warning("Config file %s not found, using defaults", config_file)

        self._apply_environment(os.environ if environ is None else environ)

    def load_from_file(self, filename: str) -> None:
        """
        Load configuration from JSON file.

        Args:
            filename: Path to configuration file
        """
        try:
            with open(filename, 'r') as f:
                file_config = json.load(f)
            self._deep_update(self.config, file_config)
        except (OSError, ValueError) as e:
            logger.warning("Could not load config file %s: %s", filename, e)

    def save_to_file(self, filename: str) -> None:
        """
        Save current configuration to JSON file.

        Args:
            filename: Path to save configuration file
        """
        with open(filename, 'w') as f:
            json.dump(self.config, f, indent=2)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value.

        Args:
            key: Configuration key (supports dot notation, e.g., 'oracle.max_n')
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        value = self.config
        try:
            for k in key.split('.'):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value: Any) -> None:
        """
        Set configuration value.

        Args:
            key: Configuration key (supports dot notation)
            value: Value to set
        """
        keys = key.split('.')
        config = self.config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value

    def _apply_environment(self, environ: Dict[str, str]) -> None:
        raw = environ.get(THREADS_ENV_VAR)
        if raw is None or raw.strip() == '':
            return
        try:
            self.set('threads', int(raw))
        except ValueError:
            logger.warning("Ignoring %s=%r: not an integer", THREADS_ENV_VAR, raw)

    def _deep_update(self, base_dict: Dict, update_dict: Dict) -> None:
        for key, value in update_dict.items():
            if key in base_dict and isinstance(base_dict[key], dict) and isinstance(value, dict):
                self._deep_update(base_dict[key], value)
            else:
                base_dict[key] = value

"""
Configuration Management Module

This module provides a singleton class for managing verifier configuration.
"""

import copy
import json
import os
from pathlib import Path

from src.models.singleton import singleton
from src.utils.errors import UsageError
from src.utils.logger import Logger

WITNESS_LEVELS = ("none", "summary", "full")


@singleton
class Config:
    """
    A singleton configuration manager for the verifier.

    Loads `config.json` (creating it from defaults when missing), merges
    it with the defaults so every key exists, and exposes get/set access
    by section and key.
    """

    DEFAULT_CONFIG = {
        "verification": {
            "workers": 1,
            "witnesses": "summary",
            "random_samples": 1000,
            "seed": 20250101
        },
        "paths": {
            "output_directory": "certificates"
        },
        "logging": {
            "level": "INFO"
        }
    }

    def __init__(self, config_path='config.json'):
        self.logger = Logger.instance()
        self._config_path = Path(config_path)
        self._config = self._load_config()
        self.logger.debug(f"Configuration initialized from {self._config_path}")

    def _load_config(self):
        """
        Load configuration from file or use defaults if file doesn't exist

        Returns:
            dict: The loaded configuration merged with defaults
        """
        if not self._config_path.exists():
            self.logger.info("Config file not found, creating default configuration")
            self._save_config(self.DEFAULT_CONFIG)
            return copy.deepcopy(self.DEFAULT_CONFIG)

        try:
            with open(self._config_path, 'r', encoding='utf-8') as f:
                config = json.load(f)
            return self._merge_with_defaults(config)
        except json.JSONDecodeError as e:
            self.logger.error(f"Invalid JSON in config file: {str(e)}")
            return copy.deepcopy(self.DEFAULT_CONFIG)
        except IOError as e:
            self.logger.error(f"Error reading config file: {str(e)}")
            return copy.deepcopy(self.DEFAULT_CONFIG)

    def _save_config(self, config):
        """
        Save configuration to file

        Args:
            config: The configuration to save

        Returns:
            bool: True if the configuration was saved successfully, False otherwise
        """
        try:
            directory = os.path.dirname(str(self._config_path))
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(self._config_path, 'w', encoding='utf-8') as f:
                json.dump(config, f, indent=4, sort_keys=True)
            return True
        except IOError as e:
            self.logger.error(f"Error saving config file: {str(e)}")
            return False

    def _merge_with_defaults(self, config):
        """
        Recursively merge loaded config with defaults to ensure all keys exist

        Args:
            config: The configuration to merge with defaults

        Returns:
            dict: The merged configuration
        """
        result = copy.deepcopy(self.DEFAULT_CONFIG)

        def update_dict(d, u):
            for k, v in u.items():
                if isinstance(v, dict) and isinstance(d.get(k), dict):
                    d[k] = update_dict(d[k], v)
                else:
                    d[k] = v
            return d

        return update_dict(result, config)

    def get(self, section, key=None):
        """
        Get a configuration value

        Args:
            section: The configuration section
            key: The specific key within the section (optional)

        Returns:
            The requested configuration value, section, or None if not found
        """
        if section not in self._config:
            self.logger.warning(f"Requested section '{section}' not found in configuration")
            return None
        if key is None:
            return self._config[section]
        if key not in self._config[section]:
            self.logger.warning(f"Requested key '{key}' not found in section '{section}'")
            return None
        return self._config[section][key]

    def set(self, section, key, value, persist=True):
        """
        Set a configuration value

        Args:
            section: The configuration section
            key: The specific key within the section
            value: The value to set
            persist: Write the file afterwards (CLI overrides pass False)

        Returns:
            bool: True if the value was set (and saved, when persisting)
        """
        self._config.setdefault(section, {})
        previous_value = self._config[section].get(key)
        self._config[section][key] = value
        self.logger.debug(f"Configuration updated: {section}.{key} = {value} (was: {previous_value})")
        if persist:
            return self._save_config(self._config)
        return True

    def save(self):
        """Save the current configuration to file"""
        return self._save_config(self._config)

    def reset_to_defaults(self):
        """
        Reset the configuration to default values

        Returns:
            bool: True if the configuration was reset successfully, False otherwise
        """
        self._config = copy.deepcopy(self.DEFAULT_CONFIG)
        self.logger.info("Configuration reset to defaults")
        return self._save_config(self._config)

    def validate(self):
        """
        Check the verification section

        Raises:
            UsageError: workers below one or an unknown witness level
        """
        workers = self.get("verification", "workers")
        if not isinstance(workers, int) or workers < 1:
            raise UsageError(f"verification.workers must be a positive integer, got {workers!r}")
        witnesses = self.get("verification", "witnesses")
        if witnesses not in WITNESS_LEVELS:
            raise UsageError(f"verification.witnesses must be one of {', '.join(WITNESS_LEVELS)}")
        samples = self.get("verification", "random_samples")
        if not isinstance(samples, int) or samples < 0:
            raise UsageError(f"verification.random_samples must be a non-negative integer, got {samples!r}")

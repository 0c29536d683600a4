"""
Logger Module

This module provides a singleton logger for the verifier.
"""

import logging
import sys


class Logger:
    """
    Singleton logger class for the verifier

    Every computation logs through this one instance. Output goes to
    standard error so that listings on standard output stay clean.
    """

    # Singleton instance
    _instance = None

    LEVELS = {
        "DEBUG": logging.DEBUG,
        "INFO": logging.INFO,
        "WARNING": logging.WARNING,
        "ERROR": logging.ERROR,
        "CRITICAL": logging.CRITICAL,
    }

    @classmethod
    def instance(cls):
        """
        Get singleton instance

        Returns:
            Logger: Singleton logger instance
        """
        if cls._instance is None:
            cls._instance = Logger()
        return cls._instance

    def __init__(self, console_level=logging.INFO):
        """
        Initialize the logger

        Args:
            console_level: Console logging level (default: INFO)
        """
        if Logger._instance is not None:
            raise Exception("Logger is a singleton - use Logger.instance() instead")

        self._logger = logging.getLogger('golden_orders')
        self._logger.setLevel(logging.DEBUG)  # filter at handler level

        # Avoid duplicate handlers on reload
        if self._logger.hasHandlers():
            self._logger.handlers.clear()
        self._logger.propagate = False

        # Guard against a handler that logs while emitting
        self._recursion_guard = False

        self._console_handler = logging.StreamHandler(sys.stderr)
        self._console_handler.setLevel(console_level)
        self._console_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
        self._logger.addHandler(self._console_handler)

    def set_level(self, level):
        """
        Change the console level

        Args:
            level: Level name ('DEBUG', 'INFO', ...) or logging constant

        Returns:
            bool: True if the level was recognised
        """
        if isinstance(level, str):
            numeric = self.LEVELS.get(level.upper())
            if numeric is None:
                self.warning(f"Unknown log level '{level}', keeping current level")
                return False
            level = numeric
        self._console_handler.setLevel(level)
        return True

    def get_level(self):
        """Current console level as a logging constant"""
        return self._console_handler.level

    def _log(self, level, message):
        if self._recursion_guard:
            return
        try:
            self._recursion_guard = True
            self._logger.log(level, message)
        finally:
            self._recursion_guard = False

    def debug(self, message):
        """Log a debug message"""
        self._log(logging.DEBUG, message)

    def info(self, message):
        """Log an info message"""
        self._log(logging.INFO, message)

    def warning(self, message):
        """Log a warning message"""
        self._log(logging.WARNING, message)

    def error(self, message):
        """Log an error message"""
        self._log(logging.ERROR, message)

    def critical(self, message):
        """Log a critical message"""
        self._log(logging.CRITICAL, message)

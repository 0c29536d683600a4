"""
Tests for the Logger class.
"""

import logging
import sys
import pytest
from unittest.mock import patch, MagicMock
from src.utils.logger import Logger

class TestLogger:
    """Test the Logger singleton class."""

    @pytest.fixture
    def mock_logging(self):
        """Mock the logging module."""
        with patch('src.utils.logger.logging') as mock_logging:
            mock_logger = MagicMock(spec=logging.Logger)
            mock_logger.hasHandlers.return_value = False
            mock_logging.getLogger.return_value = mock_logger
            yield mock_logging, mock_logger

    def test_singleton_instance(self, reset_logger):
        """Test that Logger follows the singleton pattern."""
        logger1 = Logger.instance()
        logger2 = Logger.instance()

        # Verify both variables reference the same instance
        assert logger1 is logger2

    def test_direct_construction_rejected(self, reset_logger):
        """A second Logger cannot be built past instance()."""
        Logger.instance()
        with pytest.raises(Exception):
            Logger()

    def test_logger_initialization(self, reset_logger, mock_logging):
        """Test Logger initialization and handler setup."""
        mock_logging_module, mock_logger_instance = mock_logging

        Logger.instance()

        # Verify logger was created with correct name
        mock_logging_module.getLogger.assert_called_once_with('golden_orders')
        mock_logger_instance.setLevel.assert_called_once_with(mock_logging_module.DEBUG)

        # One console handler on stderr, no log files
        mock_logging_module.StreamHandler.assert_called_once_with(sys.stderr)
        assert mock_logger_instance.addHandler.call_count == 1
        assert not mock_logging_module.FileHandler.called

    @pytest.mark.parametrize("method,level", [
        ("debug", logging.DEBUG),
        ("info", logging.INFO),
        ("warning", logging.WARNING),
        ("error", logging.ERROR),
        ("critical", logging.CRITICAL),
    ])
    def test_level_methods(self, reset_logger, method, level):
        """Every method forwards to the underlying logger at its level."""
        logger = Logger.instance()
        with patch.object(logger._logger, 'log') as mock_log:
            getattr(logger, method)("Test message")
        mock_log.assert_called_once_with(level, "Test message")

    def test_set_level_by_name(self, reset_logger):
        """Level names set the console handler level."""
        logger = Logger.instance()
        assert logger.set_level("debug")
        assert logger.get_level() == logging.DEBUG
        assert logger.set_level("WARNING")
        assert logger.get_level() == logging.WARNING

    def test_set_level_unknown_name(self, reset_logger):
        """Unknown names keep the current level."""
        logger = Logger.instance()
        before = logger.get_level()
        assert not logger.set_level("LOUD")
        assert logger.get_level() == before

    def test_output_goes_to_stderr(self, reset_logger, capsys):
        """Log records never reach standard output."""
        logger = Logger.instance()
        logger.info("to stderr")
        captured = capsys.readouterr()
        assert "to stderr" not in captured.out

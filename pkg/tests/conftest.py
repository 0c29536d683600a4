"""
Pytest configuration file with fixtures for testing the golden-orders verifier.
"""

import os
import sys
import pytest
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.models.orders.catalog import catalog
from src.models.orders.spec import verify_order
from src.models.shells.enumeration import enumerate_unit_shell
from src.utils.config import Config
from src.utils.logger import Logger


@pytest.fixture
def reset_logger():
    """Reset the Logger singleton between tests."""
    original_instance = Logger._instance
    Logger._instance = None
    yield
    Logger._instance = original_instance


@pytest.fixture
def fresh_config(tmpdir):
    """A Config singleton backed by a file in a temporary directory"""
    original_instance = Config._instance
    Config._instance = None
    config = Config.instance(os.path.join(str(tmpdir), "config.json"))
    yield config
    Config._instance = original_instance


@pytest.fixture(scope="session")
def order_tables():
    """Structure tables per catalog order, computed once per session"""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = verify_order(catalog(name), samples=50, seed=7)
        return cache[name]
    return get


@pytest.fixture(scope="session")
def unit_shell(order_tables):
    """Unit shells per catalog order, computed once per session"""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = enumerate_unit_shell(catalog(name), 1, order_tables(name))
        return cache[name]
    return get


@pytest.fixture
def temp_dir(tmpdir):
    """Create a temporary directory for tests"""
    return tmpdir

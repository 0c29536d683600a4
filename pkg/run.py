"""
Golden Orders Verifier

This is the main entry point for the golden-orders certificate tool.
It puts the project on the Python path and hands the arguments to the
command-line view.
"""

import sys
from pathlib import Path

# Set up paths
PROJECT_ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.utils.logger import Logger
from src.views.cli import main as cli_main


def main():
    """
    Main application entry point.

    Returns:
        int: Process exit code (0 pass, 1 mismatch, 2 inconsistency, 3 usage)
    """
    logger = Logger.instance()
    logger.debug("golden-orders starting")
    exit_code = cli_main(sys.argv[1:])
    logger.debug(f"golden-orders exiting with code {exit_code}")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())

"""
Golden orders package
"""

__version__ = '1.0.0'  # pragma: no cover

"""
Orders Package

Order specifications, the order criterion and the catalog of named orders.
"""

from src.models.orders.spec import OrderSpec, StructureTables, coordinates_of, verify_order
from src.models.orders.catalog import ORDER_NAMES, catalog, catalog_names

__all__ = [
    'OrderSpec',
    'StructureTables',
    'coordinates_of',
    'verify_order',
    'ORDER_NAMES',
    'catalog',
    'catalog_names',
]

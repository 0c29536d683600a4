"""Models package: exact algebras, orders, shells, duality and certificates."""

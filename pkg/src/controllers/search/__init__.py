"""
Search Package

Exhaustive searches for nonclassical intermediate orders: denominator-2
lines over F4, sqrt 5 lines over F5, strict half-root cosets and the
discriminant-form tower.
"""

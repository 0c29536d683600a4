"""
Math Utilities Package
====================

Exact arithmetic in Z[phi] and Q(sqrt 5), exact linear algebra, integer
normal forms and short-vector enumeration.
"""

from src.utils.math.golden import FieldElem, GoldenInt, Ring

__all__ = ['FieldElem', 'GoldenInt', 'Ring']

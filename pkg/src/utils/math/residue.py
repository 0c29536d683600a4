"""
Residue fields of Z[phi] at its two smallest primes.

Z[phi]/2 is the field with four elements, kept as the coefficient pair
mod 2 with the product induced by phi^2 = phi + 1. Z[phi]/(sqrt5) is the
field with five elements, reached by sending phi to 3.
"""

from typing import Tuple

from src.utils.errors import DivisionByZeroError
from src.utils.math.golden import GoldenInt


class ResidueF4:
    """Class of a + b*phi modulo 2 Z[phi]"""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        object.__setattr__(self, "a", a % 2)
        object.__setattr__(self, "b", b % 2)

    def __setattr__(self, name, value):
        raise AttributeError("ResidueF4 is immutable")

    @classmethod
    def from_code(cls, code: int) -> "ResidueF4":
        """Codes 0, 1, 2, 3 stand for 0, 1, phi, phi^2 = 1 + phi"""
        return cls(code & 1, code >> 1)

    @property
    def code(self) -> int:
        return self.a + 2 * self.b

    def __add__(self, other):
        return ResidueF4(self.a + other.a, self.b + other.b)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        bd = self.b * other.b
        return ResidueF4(self.a * other.a + bd, self.a * other.b + self.b * other.a + bd)

    def __pow__(self, exponent: int):
        result = ResidueF4(1, 0)
        for _ in range(exponent % 3 if self else exponent):
            result = result * self
        return result

    def inverse(self) -> "ResidueF4":
        if not self:
            raise DivisionByZeroError("inverse of zero in F4")
        return self * self  # the unit group has order 3

    def lift(self) -> GoldenInt:
        """Representative with coefficients in {0, 1}"""
        return GoldenInt(self.a, self.b)

    def __eq__(self, other):
        if not isinstance(other, ResidueF4):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash(("F4", self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"ResidueF4({self.a}, {self.b})"


class ResidueF5:
    """Class of x modulo sqrt5 Z[phi], with phi -> 3"""

    __slots__ = ("r",)

    def __init__(self, r: int = 0):
        object.__setattr__(self, "r", r % 5)

    def __setattr__(self, name, value):
        raise AttributeError("ResidueF5 is immutable")

    def __add__(self, other):
        return ResidueF5(self.r + other.r)

    def __sub__(self, other):
        return ResidueF5(self.r - other.r)

    def __neg__(self):
        return ResidueF5(-self.r)

    def __mul__(self, other):
        return ResidueF5(self.r * other.r)

    def inverse(self) -> "ResidueF5":
        if not self.r:
            raise DivisionByZeroError("inverse of zero in F5")
        return ResidueF5(pow(self.r, 3, 5))

    def lift(self) -> GoldenInt:
        return GoldenInt(self.r, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.r == other % 5
        if not isinstance(other, ResidueF5):
            return NotImplemented
        return self.r == other.r

    def __hash__(self):
        return hash(("F5", self.r))

    def __bool__(self):
        return self.r != 0

    def __repr__(self):
        return f"ResidueF5({self.r})"


F4_ELEMENTS: Tuple[ResidueF4, ...] = tuple(ResidueF4.from_code(c) for c in range(4))
F5_ELEMENTS: Tuple[ResidueF5, ...] = tuple(ResidueF5(r) for r in range(5))


def reduce_mod2(x: GoldenInt) -> ResidueF4:
    return ResidueF4(x.a, x.b)


def reduce_mod_sqrt5(x: GoldenInt) -> ResidueF5:
    return ResidueF5(x.a + 3 * x.b)

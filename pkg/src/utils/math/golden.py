"""
Golden Arithmetic Module
========================

Exact arithmetic in the golden ring Z[phi] and its fraction field
K = Q(sqrt 5), with phi^2 = phi + 1.

GoldenInt holds a + b*phi with integer a, b. FieldElem holds a + b*phi
with rational a, b, stored as integer numerators over one positive common
denominator so that sums with equal denominators stay cheap.

Both types are immutable and hash consistently with int and Fraction:
GoldenInt(3, 0) == FieldElem(3) == 3 and all three share a hash.
"""

from enum import Enum
from fractions import Fraction
from math import gcd
import re
from typing import Tuple, Union

from src.utils.errors import DivisionByZeroError, InconsistencyError, NotInRingError

Rational = Union[int, Fraction]


class GoldenInt:
    """
    Element a + b*phi of Z[phi].

    Supports +, -, * with other GoldenInt values and ints; division
    returns a FieldElem.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        if not isinstance(a, int) or not isinstance(b, int):
            raise TypeError("GoldenInt coefficients must be integers")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("GoldenInt is immutable")

    @staticmethod
    def coerce(value) -> "GoldenInt":
        if isinstance(value, GoldenInt):
            return value
        if isinstance(value, int):
            return GoldenInt(value, 0)
        if isinstance(value, FieldElem):
            return value.to_golden()
        if isinstance(value, Fraction) and value.denominator == 1:
            return GoldenInt(value.numerator, 0)
        raise NotInRingError(value, Ring.GOLDEN.value)

    def __add__(self, other):
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a + other.a, self.b + other.b)
        if isinstance(other, int):
            return GoldenInt(self.a + other, self.b)
        if isinstance(other, (FieldElem, Fraction)):
            return FieldElem.coerce(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a - other.a, self.b - other.b)
        if isinstance(other, int):
            return GoldenInt(self.a - other, self.b)
        if isinstance(other, (FieldElem, Fraction)):
            return FieldElem.coerce(self) - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GoldenInt):
            bd = self.b * other.b
            return GoldenInt(self.a * other.a + bd, self.a * other.b + self.b * other.a + bd)
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        if isinstance(other, (FieldElem, Fraction)):
            return FieldElem.coerce(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem.coerce(self) / other

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) / FieldElem.coerce(self)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.unit_inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "GoldenInt":
        """Galois conjugate: phi -> 1 - phi"""
        return GoldenInt(self.a + self.b, -self.b)

    def trace(self) -> int:
        return 2 * self.a + self.b

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() in (1, -1)

    def unit_inverse(self) -> "GoldenInt":
        """
        Inverse of a unit, conj(x) / N(x)

        Raises:
            NotInRingError: x is not a unit of Z[phi]
        """
        n = self.norm()
        if n not in (1, -1):
            raise NotInRingError(FieldElem.coerce(self).inverse(), Ring.GOLDEN.value)
        c = self.conj()
        return c if n == 1 else -c

    def exact_div(self, other) -> "GoldenInt":
        """
        Quotient inside Z[phi]

        Raises:
            DivisionByZeroError: other is zero
            NotInRingError: other does not divide self
        """
        return (FieldElem.coerce(self) / other).to_golden()

    def dirichlet_height(self) -> int:
        """Coordinate projection a + b*phi -> a"""
        return self.a

    def __eq__(self, other):
        if isinstance(other, GoldenInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, (FieldElem, Fraction)):
            return FieldElem.coerce(self) == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, 1))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"GoldenInt({self.a}, {self.b})"

    def __str__(self):
        return render_golden(self)


class FieldElem:
    """
    Element a + b*phi of K = Q(sqrt 5) with exact rational a, b.

    Internally (na + nb*phi) / d with d > 0 and gcd(na, nb, d) = 1.
    """

    __slots__ = ("na", "nb", "d")

    def __init__(self, a: Union[Rational, GoldenInt] = 0, b: Rational = 0):
        if isinstance(a, GoldenInt):
            if b:
                raise TypeError("FieldElem(GoldenInt) takes no second coefficient")
            na, nb, d = a.a, a.b, 1
        else:
            fa = Fraction(a)
            fb = Fraction(b)
            d = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
            na = fa.numerator * (d // fa.denominator)
            nb = fb.numerator * (d // fb.denominator)
        self._set(na, nb, d)

    def _set(self, na, nb, d):
        if d < 0:
            na, nb, d = -na, -nb, -d
        g = gcd(gcd(na, nb), d)
        if g > 1:
            na, nb, d = na // g, nb // g, d // g
        object.__setattr__(self, "na", na)
        object.__setattr__(self, "nb", nb)
        object.__setattr__(self, "d", d)

    @classmethod
    def _make(cls, na: int, nb: int, d: int) -> "FieldElem":
        obj = cls.__new__(cls)
        obj._set(na, nb, d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    @staticmethod
    def coerce(value) -> "FieldElem":
        if isinstance(value, FieldElem):
            return value
        if isinstance(value, GoldenInt):
            return FieldElem._make(value.a, value.b, 1)
        if isinstance(value, int):
            return FieldElem._make(value, 0, 1)
        if isinstance(value, Fraction):
            return FieldElem._make(value.numerator, 0, value.denominator)
        raise TypeError(f"cannot interpret {value!r} as an element of K")

    @property
    def a(self) -> Fraction:
        return Fraction(self.na, self.d)

    @property
    def b(self) -> Fraction:
        return Fraction(self.nb, self.d)

    def __add__(self, other):
        if not isinstance(other, FieldElem):
            if not isinstance(other, (GoldenInt, int, Fraction)):
                return NotImplemented
            other = FieldElem.coerce(other)
        if self.d == other.d:
            return FieldElem._make(self.na + other.na, self.nb + other.nb, self.d)
        return FieldElem._make(self.na * other.d + other.na * self.d,
                               self.nb * other.d + other.nb * self.d,
                               self.d * other.d)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem._make(-self.na, -self.nb, self.d)

    def __sub__(self, other):
        if not isinstance(other, FieldElem):
            if not isinstance(other, (GoldenInt, int, Fraction)):
                return NotImplemented
            other = FieldElem.coerce(other)
        if self.d == other.d:
            return FieldElem._make(self.na - other.na, self.nb - other.nb, self.d)
        return FieldElem._make(self.na * other.d - other.na * self.d,
                               self.nb * other.d - other.nb * self.d,
                               self.d * other.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElem._make(self.na * other, self.nb * other, self.d)
        if not isinstance(other, FieldElem):
            if not isinstance(other, (GoldenInt, Fraction)):
                return NotImplemented
            other = FieldElem.coerce(other)
        bd = self.nb * other.nb
        return FieldElem._make(self.na * other.na + bd,
                               self.na * other.nb + self.nb * other.na + bd,
                               self.d * other.d)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        """
        x^-1 = x* / (x x*)

        Raises:
            DivisionByZeroError: x is zero
        """
        n = self.na * self.na + self.na * self.nb - self.nb * self.nb
        if n == 0:
            # the norm form is anisotropic over Q, so only zero gets here
            raise DivisionByZeroError("inverse of zero in K")
        return FieldElem._make((self.na + self.nb) * self.d, -self.nb * self.d, n)

    def __truediv__(self, other):
        if not isinstance(other, FieldElem):
            if not isinstance(other, (GoldenInt, int, Fraction)):
                return NotImplemented
            other = FieldElem.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = FieldElem._make(1, 0, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "FieldElem":
        return FieldElem._make(self.na + self.nb, -self.nb, self.d)

    def trace(self) -> Fraction:
        return Fraction(2 * self.na + self.nb, self.d)

    def norm(self) -> Fraction:
        return Fraction(self.na * self.na + self.na * self.nb - self.nb * self.nb, self.d * self.d)

    def is_golden(self) -> bool:
        return self.d == 1

    def is_integer(self) -> bool:
        return self.d == 1 and self.nb == 0

    def is_rational(self) -> bool:
        return self.nb == 0

    def to_golden(self) -> GoldenInt:
        if self.d != 1:
            raise NotInRingError(self, Ring.GOLDEN.value)
        return GoldenInt(self.na, self.nb)

    def to_integer(self) -> int:
        if self.d != 1 or self.nb != 0:
            raise NotInRingError(self, Ring.INTEGER.value)
        return self.na

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.na == other.na and self.nb == other.nb and self.d == other.d
        if isinstance(other, (GoldenInt, int, Fraction)):
            return self == FieldElem.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self.nb == 0:
            return hash(Fraction(self.na, self.d))
        return hash((self.na, self.nb, self.d))

    def __bool__(self):
        return self.na != 0 or self.nb != 0

    def __repr__(self):
        return f"FieldElem({self.a}, {self.b})"

    def __str__(self):
        return render_field(self)


ZERO = GoldenInt(0, 0)
ONE = GoldenInt(1, 0)
PHI = GoldenInt(0, 1)
PHI_INVERSE = GoldenInt(-1, 1)
SQRT5 = GoldenInt(-1, 2)
KAPPA = FieldElem(Fraction(3, 5), Fraction(-1, 5))  # 1 / (2 + phi)
INVERSE_SQRT5 = FieldElem(Fraction(-1, 5), Fraction(2, 5))


class Ring(Enum):
    """Coefficient rings of the orders: Z, Z[phi] and the field K"""

    INTEGER = "Z"
    GOLDEN = "Z[phi]"
    FIELD = "K"

    def zero(self):
        return {Ring.INTEGER: 0, Ring.GOLDEN: ZERO, Ring.FIELD: FieldElem(0)}[self]

    def one(self):
        return {Ring.INTEGER: 1, Ring.GOLDEN: ONE, Ring.FIELD: FieldElem(1)}[self]

    def contains(self, value) -> bool:
        x = FieldElem.coerce(value)
        if self is Ring.INTEGER:
            return x.is_integer()
        if self is Ring.GOLDEN:
            return x.is_golden()
        return True

    def from_field(self, value):
        """
        Convert a K-value into this ring's native type

        Raises:
            NotInRingError: value is not in the ring
        """
        x = FieldElem.coerce(value)
        if self is Ring.INTEGER:
            return x.to_integer()
        if self is Ring.GOLDEN:
            return x.to_golden()
        return x

    def is_unit(self, value) -> bool:
        x = FieldElem.coerce(value)
        if self is Ring.INTEGER:
            return x.is_integer() and x.na in (1, -1)
        if self is Ring.GOLDEN:
            return x.is_golden() and x.to_golden().is_unit()
        return bool(x)

    @staticmethod
    def of(values) -> "Ring":
        """Smallest ring holding every value's native type"""
        ring = Ring.INTEGER
        for v in values:
            if isinstance(v, FieldElem) or isinstance(v, Fraction):
                return Ring.FIELD
            if isinstance(v, GoldenInt):
                ring = Ring.GOLDEN
        return ring


# ---------------------------------------------------------------------------
# Named operations
# ---------------------------------------------------------------------------

def golden_mul(x: GoldenInt, y: GoldenInt) -> GoldenInt:
    return x * y


def golden_conj(x: GoldenInt) -> GoldenInt:
    return x.conj()


def golden_trace_norm(x: GoldenInt) -> Tuple[int, int]:
    return x.trace(), x.norm()


def golden_pow(x: GoldenInt, k: int) -> GoldenInt:
    """x^k; negative k only for units"""
    return x ** k


def dirichlet_height(x: GoldenInt) -> int:
    """
    The coordinate a of x = a + b*phi, read off directly and again through
    the kappa trace formula

    Raises:
        InconsistencyError: the two computations disagree
    """
    height = x.dirichlet_height()
    via_kappa = dirichlet_height_via_kappa(x)
    if via_kappa != height:
        raise InconsistencyError(f"dirichlet height of {x}: coordinate {height}, "
                                 f"kappa trace {via_kappa}")
    return height


def dirichlet_height_via_kappa(x) -> FieldElem:
    """kappa*x + (kappa*x)* for kappa = 1/(2 + phi); equals a for x = a + b*phi"""
    kx = KAPPA * FieldElem.coerce(x)
    return kx + kx.conj()


def lambda_member(alpha) -> bool:
    """
    Membership in Z*phi + Z/sqrt5, tested through the two trace conditions
    Tr(alpha) in Z and Tr(phi^2 alpha) in Z.
    """
    x = FieldElem.coerce(alpha)
    return x.trace().denominator == 1 and (x * GoldenInt(1, 1)).trace().denominator == 1


def lambda_coordinates(alpha) -> Tuple[int, int]:
    """
    (m, n) with alpha = m*phi + (n - 4m)/sqrt5, where m = Tr(alpha) and
    n = Tr(phi^2 alpha).

    Raises:
        NotInRingError: alpha is not in the trace-norm lattice
    """
    x = FieldElem.coerce(alpha)
    m = x.trace()
    n = (x * GoldenInt(1, 1)).trace()
    if m.denominator != 1 or n.denominator != 1:
        raise NotInRingError(x, "Z*phi + Z/sqrt5")
    return m.numerator, n.numerator


def from_lambda_coordinates(m: int, n: int) -> FieldElem:
    return FieldElem.coerce(PHI) * m + INVERSE_SQRT5 * (n - 4 * m)


def two_cos_pi_fifths(k: int) -> GoldenInt:
    """2cos(k*pi/5) in Z[phi] from c0 = 2, c1 = phi, c(k+1) = phi*c(k) - c(k-1)"""
    k %= 10
    previous, current = GoldenInt(2, 0), PHI
    if k == 0:
        return previous
    for _ in range(k - 1):
        previous, current = current, PHI * current - previous
    return current


# ---------------------------------------------------------------------------
# Canonical rendering
# ---------------------------------------------------------------------------

def render_golden(x: GoldenInt) -> str:
    sign = "-" if x.b < 0 else "+"
    return f"{x.a}{sign}{abs(x.b)}*phi"


def _render_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def render_field(x: FieldElem) -> str:
    b = x.b
    sign = "-" if b < 0 else "+"
    return f"{_render_fraction(x.a)}{sign}{_render_fraction(abs(b))}*phi"


def render_value(x) -> str:
    """Render int, GoldenInt or FieldElem in their canonical forms"""
    if isinstance(x, GoldenInt):
        return render_golden(x)
    if isinstance(x, FieldElem):
        return render_field(x)
    return str(x)


_GOLDEN_PATTERN = re.compile(r"^(-?\d+)([+-])(\d+)\*phi$")
_FIELD_PATTERN = re.compile(r"^(-?\d+)/(\d+)([+-])(\d+)/(\d+)\*phi$")


def parse_golden(text: str) -> GoldenInt:
    match = _GOLDEN_PATTERN.match(text.strip())
    if match is None:
        raise ValueError(f"not a canonical golden integer: {text!r}")
    b = int(match.group(3))
    return GoldenInt(int(match.group(1)), -b if match.group(2) == "-" else b)


def parse_field(text: str) -> FieldElem:
    match = _FIELD_PATTERN.match(text.strip())
    if match is None:
        raise ValueError(f"not a canonical field element: {text!r}")
    a = Fraction(int(match.group(1)), int(match.group(2)))
    b = Fraction(int(match.group(4)), int(match.group(5)))
    return FieldElem(a, -b if match.group(3) == "-" else b)

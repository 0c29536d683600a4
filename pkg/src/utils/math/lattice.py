"""
Short-vector enumeration in positive-definite integral quadratic forms.

Fincke-Pohst: the Gram matrix is brought to the completed-square form
Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2 with exact rationals, and
coordinates are enumerated from the last one down. Interval ends come
from integer square roots so no floating value decides membership.
"""

from fractions import Fraction
from math import floor, ceil, isqrt
from typing import List, Optional, Sequence, Tuple

from src.utils.errors import DegenerateFormError


def completed_squares(gram: Sequence[Sequence]) -> List[List[Fraction]]:
    """
    q[i][i] > 0 and q[i][j] (i < j) with Q(x) = sum q_ii (x_i + sum q_ij x_j)^2

    Raises:
        DegenerateFormError: the form is not positive definite
    """
    n = len(gram)
    q = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise DegenerateFormError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _integer_window(center: Fraction, radius_squared: Fraction) -> Tuple[int, int]:
    """Smallest and largest integers x with (x - center)^2 <= radius_squared"""
    r = isqrt(floor(radius_squared)) + 1
    lo = floor(center) - r
    hi = ceil(center) + r
    while lo <= hi and (lo - center) ** 2 > radius_squared:
        lo += 1
    while hi >= lo and (hi - center) ** 2 > radius_squared:
        hi -= 1
    return lo, hi


def top_level_values(gram: Sequence[Sequence], bound) -> List[int]:
    """Admissible values of the last coordinate; workers split on these"""
    q = completed_squares(gram)
    n = len(q)
    lo, hi = _integer_window(Fraction(0), Fraction(bound) / q[n - 1][n - 1])
    return list(range(lo, hi + 1))


def short_vectors(gram: Sequence[Sequence], bound,
                  top_values: Optional[Sequence[int]] = None) -> List[Tuple[int, ...]]:
    """
    All integer x with x^T G x <= bound, in lexicographic order of
    (x_{n-1}, ..., x_0). The zero vector is included.

    top_values restricts the last coordinate to the given values, so that
    disjoint value sets partition the output.
    """
    q = completed_squares(gram)
    n = len(q)
    bound = Fraction(bound)
    out = []
    x = [0] * n

    def recurse(i: int, remaining: Fraction):
        center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        if i == n - 1 and top_values is not None:
            values = [v for v in sorted(top_values)
                      if q[i][i] * (v - center) ** 2 <= remaining]
        else:
            lo, hi = _integer_window(center, remaining / q[i][i])
            values = range(lo, hi + 1)
        for value in values:
            x[i] = value
            rest = remaining - q[i][i] * (value - center) ** 2
            if i == 0:
                out.append(tuple(x))
            else:
                recurse(i - 1, rest)
        x[i] = 0

    recurse(n - 1, bound)
    out.sort(key=lambda v: tuple(reversed(v)))
    return out


def quadratic_value(gram: Sequence[Sequence], x: Sequence[int]):
    n = len(x)
    return sum(gram[i][j] * x[i] * x[j] for i in range(n) for j in range(n))


def coordinate_box(inverse_gram_diagonal: Sequence[Fraction], bound) -> Tuple[int, ...]:
    """
    |x_i| <= sqrt(bound * (G^-1)_ii) for every x with x^T G x <= bound;
    returned as integer bounds floor(sqrt(.)).
    """
    bound = Fraction(bound)
    box = []
    for g in inverse_gram_diagonal:
        value = bound * Fraction(g)
        # floor(sqrt(p/q)) = isqrt(p*q) // q, refined for exactness
        r = isqrt(value.numerator * value.denominator) // value.denominator
        while Fraction((r + 1) ** 2) <= value:
            r += 1
        while Fraction(r ** 2) > value:
            r -= 1
        box.append(r)
    return tuple(box)

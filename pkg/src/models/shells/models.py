"""
Coordinate models of the non-crystallographic root systems H2, H3, H4.

H2 is the decagon of tenth roots of unity in C(z10), where z^2 = phi z - 1;
H3 lives in the pure quaternions and H4 in the quaternions, both with
coordinates in K.
"""

from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, List, Sequence, Tuple

from src.models.algebra import DECAGONAL_PLANE, QUATERNIONS, polar_form
from src.models.orders.catalog import catalog
from src.models.shells.shell import Shell
from src.utils.errors import InconsistencyError
from src.utils.math.golden import PHI, PHI_INVERSE, FieldElem, two_cos_pi_fifths

HALF = Fraction(1, 2)


def _sign_choices(values: Sequence[FieldElem]) -> Iterable[Tuple[FieldElem, ...]]:
    for signs in product((1, -1), repeat=len(values)):
        yield tuple(v * s for v, s in zip(values, signs))


def _even_permutations(n: int) -> List[Tuple[int, ...]]:
    out = []
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        if inversions % 2 == 0:
            out.append(perm)
    return out


def _all_permutations_of(values: Sequence[FieldElem], perms) -> set:
    out = set()
    for signed in _sign_choices(values):
        for perm in perms:
            out.add(tuple(signed[p] for p in perm))
    return out


def h2_model() -> Shell:
    """
    The ten powers of z in the cyclotomic order. Their pairings are checked
    against B(z^a, z^b) = 2cos((a - b) pi / 5).
    """
    z = DECAGONAL_PLANE.named("z")
    powers = [DECAGONAL_PLANE.one()]
    for _ in range(9):
        powers.append(powers[-1] * z)
    if powers[-1] * z != DECAGONAL_PLANE.one():
        raise InconsistencyError("z^10 != 1 in C(z10)")
    for a, x in enumerate(powers):
        for b, y in enumerate(powers):
            if polar_form(x, y) != FieldElem.coerce(two_cos_pi_fifths(a - b)):
                raise InconsistencyError(f"B(z^{a}, z^{b}) differs from 2cos(({a}-{b})pi/5)")
    return Shell.from_elements(DECAGONAL_PLANE, 1, powers, catalog("cyclotomic"), name="H2")


def h3_model() -> Shell:
    """Icosidodecahedron: (+-1, 0, 0) permuted and (+-1, +-phi, +-phi^-1)/2 cycled"""
    one, zero = FieldElem(1), FieldElem(0)
    cyclic = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    all_perms = list(permutations(range(3)))
    vectors = _all_permutations_of((one, zero, zero), all_perms)
    vectors |= _all_permutations_of((FieldElem(HALF), FieldElem(PHI) * HALF,
                                     FieldElem(PHI_INVERSE) * HALF), cyclic)
    elements = [QUATERNIONS.element((zero,) + v) for v in vectors]
    return Shell.from_elements(QUATERNIONS, 1, elements, name="H3")


def h4_model() -> Shell:
    """
    600-cell vertices: (+-1, 0, 0, 0) permuted, (+-1, +-1, +-1, +-1)/2 and
    even permutations of (0, +-1, +-phi, +-phi^-1)/2
    """
    one, zero, half = FieldElem(1), FieldElem(0), FieldElem(HALF)
    all_perms = list(permutations(range(4)))
    vectors = _all_permutations_of((one, zero, zero, zero), all_perms)
    vectors |= _all_permutations_of((half, half, half, half), [(0, 1, 2, 3)])
    vectors |= _all_permutations_of((zero, half, FieldElem(PHI) * HALF,
                                     FieldElem(PHI_INVERSE) * HALF), _even_permutations(4))
    elements = [QUATERNIONS.element(v) for v in vectors]
    return Shell.from_elements(QUATERNIONS, 1, elements, name="H4")

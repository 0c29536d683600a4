"""
Reference values every certificate is compared against.

Each value carries a citation string describing where the number comes
from; certificates embed both, and a FAIL prints expected against computed.
"""

from dataclasses import dataclass
from typing import Dict


@dataclass(frozen=True)
class Oracle:
    value: object
    citation: str

    def as_dict(self) -> dict:
        return {"value": self.value, "citation": self.citation}


TOOL_NAME = "golden-orders"
CD_CONVENTION = "(a+bl)(c+dl)=(ac-conj(d)b)+(da+b*conj(c))l"

# -- P2: unit shells ---------------------------------------------------------

SHELL_SIZES: Dict[str, Oracle] = {
    "integers": Oracle(2, "units of Z: +-1"),
    "gaussian": Oracle(4, "Gaussian integers: 4 units"),
    "eisenstein": Oracle(6, "Eisenstein integers: 6 units"),
    "cyclotomic": Oracle(10, "Z[z10]: the 10 tenth roots of unity"),
    "hamilton": Oracle(8, "Hamilton quaternions: 8 units +-1, +-i, +-j, +-k"),
    "hybrid": Oracle(12, "Z[w] + Z[w]j: 12 units"),
    "hurwitz": Oracle(24, "Hurwitz order: 24 norm-one elements"),
    "icosian": Oracle(120, "icosian ring: 120 units, the H4 roots"),
    "graves_cayley": Oracle(16, "Graves-Cayley octonions: 16 units"),
    "coxeter_dickson": Oracle(240, "Coxeter-Dickson octonions: 240 units, the E8 roots"),
    "icosian_double": Oracle(240, "icosian double: 240 units of type H4+H4"),
}

MODEL_SIZES: Dict[str, Oracle] = {
    "H2": Oracle(10, "decagon: 10 roots"),
    "H3": Oracle(30, "icosidodecahedron: 30 roots"),
    "H4": Oracle(120, "600-cell: 120 roots"),
}

CRYSTALLOGRAPHIC = frozenset({"integers", "gaussian", "eisenstein", "hamilton", "hybrid",
                              "hurwitz", "graves_cayley", "coxeter_dickson"})

H2_CARTAN_VALUES = Oracle(("-1+1*phi", "-2+0*phi", "0+1*phi", "0-1*phi", "1-1*phi", "2+0*phi"),
                          "decagon Cartan values 2cos(k pi/5) in {+-2, +-phi, +-(phi-1)}")

MIXED_COUNTS: Dict[str, Oracle] = {
    "icosian_double": Oracle(0, "H4+H4 shell splits across the (H, Hl) decomposition"),
    "coxeter_dickson": Oracle(224, "E8 roots with both halves nonzero: all but the 16 units"),
}

# -- P3: Gram matrices ---------------------------------------------------------

ICOSIAN_GRAM = Oracle(
    (("2+0*phi", "0+0*phi", "1+0*phi", "-1+0*phi"),
     ("0+0*phi", "2+0*phi", "1+0*phi", "-1+1*phi"),
     ("1+0*phi", "1+0*phi", "2+0*phi", "-1+0*phi"),
     ("-1+0*phi", "-1+1*phi", "-1+0*phi", "2+0*phi")),
    "polar Gram of the icosian basis e1..e4")
ICOSIAN_GRAM_DET = Oracle("1+1*phi", "det of the icosian Gram is phi^2 = phi + 1")
G0_GRAM_DET = Oracle("2+3*phi", "det of the icosian-double Gram is phi^4 = 2 + 3 phi")
G0_DET_FIELD_NORM = Oracle(1, "field norm of 2 + 3 phi is 1")
HAMILTON_GRAM_DET = Oracle(16, "det(2 I4) = 16 is not a unit")
ICOSIAN_TRACE_DET = Oracle(625, "icosian trace lattice is even with determinant 625")
G0_TRACE_DET = Oracle(390625, "doubled trace lattice has determinant 5^8")
ICOSIAN_DISCRIMINANT = Oracle((5, 5, 5, 5), "icosian trace discriminant (Z/5)^4")
G0_DISCRIMINANT = Oracle((5,) * 8, "trace-polar discriminant quotient (Z/5)^8")

# -- P4: denominator-two lines over F4 ---------------------------------------

DEN2_TOTAL = Oracle(21845, "(4^8 - 1)/(4 - 1) projective lines")
DEN2_NOT_MIXED = Oracle(170, "85 unmixed lines per quaternionic half")
DEN2_CONJ_FAIL = Oracle(16320, "lines failing conjugation stability")
DEN2_PAIRING_FAIL = Oracle(5355, "lines failing the integral pairing")
DEN2_SURVIVORS = Oracle(0, "no denominator-two gluing survives")

# -- P5: sqrt 5 lines over F5 -------------------------------------------------

SQRT5_TOTAL = Oracle(97656, "(5^8 - 1)/(5 - 1) projective lines")
SQRT5_MIXED = Oracle(97344, "mixed lines: 97656 - 2 * 156")
SQRT5_SURVIVORS = Oracle(0, "no line passes the polar-pairing filter")
SQRT5_GRAM_RANK = Oracle(8, "polar form is nondegenerate mod sqrt 5")

# -- half-root scans ----------------------------------------------------------

HALF_ROOT_PAIRS = Oracle(14400, "120 x 120 pairs (a + b l)/2, each of norm 1/2")
HALF_ROOT_NORM = Oracle("1/2+0/1*phi", "N((a + b l)/2) = (N(a) + N(b))/4 = 1/2")
HALF_ROOT_COSETS = Oracle(3600, "denominator-two cosets of the pairs")
HALF_ROOT_LINES = Oracle(3600, "projective denominator-two lines of the pairs")
HALF_ROOT_SURVIVORS = Oracle(0, "no strict half-root gluing")
HALF_ROOT_TRACE_NORM = Oracle(1, "Tr N(v/2) = 1 for every pair")
HALF_ROOT_PHI_TRACE = Oracle("3/2", "Tr N(phi v/2) = 3/2 is not integral")
HALF_ROOT_POLAR_RAW = Oracle(324, "raw pairs passing the trace polar filter")
HALF_ROOT_POLAR_COSETS = Oracle(81, "projective cosets passing the trace polar filter")
HALF_ROOT_MODULE_SURVIVORS = Oracle(0, "no trace-integral module survivor")

# -- P6: discriminant tower ---------------------------------------------------

TOWER_LINES = Oracle(97656, "projective lines of (Z/5)^8")
TOWER_ISOTROPIC = Oracle(19656, "isotropic lines of the split form O+(8,5)")
TOWER_MINUS_ISOTROPIC = Oracle(19406, "isotropic lines of a minus-type form of rank 8 over F5")
TOWER_HYPERBOLIC_RANK = Oracle(4, "discriminant form has hyperbolic rank 4")
TOWER_PHI_SCALAR = Oracle(3, "phi acts on the quotient as the scalar 3")
TOWER_CLOSURE_DIM8 = Oracle(19656, "every stable closure has dimension 8")
TOWER_CANDIDATES = Oracle(0, "no nonzero isotropic stable subspace")

# -- P1: order closure ---------------------------------------------------------

CATALOG_ORDERS_VALID = Oracle(11, "every catalog order satisfies the order criterion")
ALTERNATIVE_SAMPLES = 10000

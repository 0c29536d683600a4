"""
Errors Module

Exception hierarchy shared by the arithmetic kernels, the order catalog,
the searches and the certificate runner. Library code raises these; only
the command-line view turns them into exit codes.
"""


class GoldenOrdersError(Exception):
    """Base class for every error raised by this package"""


class DivisionByZeroError(GoldenOrdersError, ZeroDivisionError):
    """Inversion of a zero element of K or of a singular matrix"""


class NotInRingError(GoldenOrdersError, ValueError):
    """A K-value was required to lie in Z or Z[phi] but does not"""

    def __init__(self, value, ring):
        super().__init__(f"{value} is not an element of {ring}")
        self.value = value
        self.ring = ring


class NonSquareMatrixError(GoldenOrdersError, ValueError):
    """Operation requires a square matrix"""


class DimensionMismatchError(GoldenOrdersError, ValueError):
    """Operands live in spaces of different dimension"""


class NotUnitError(GoldenOrdersError):
    """Determinant is not a unit of the coefficient ring"""

    def __init__(self, det):
        super().__init__(f"determinant {det} is not a ring unit")
        self.det = det


class NoSolutionError(GoldenOrdersError):
    """
    Linear system without a solution in the requested ring.

    `solution` holds the fraction-field solution when the system is
    nonsingular but leaves the ring, and None when it is singular.
    """

    def __init__(self, solution=None):
        if solution is None:
            message = "linear system is singular"
        else:
            message = "solution leaves the coefficient ring: " + ", ".join(str(s) for s in solution)
        super().__init__(message)
        self.solution = solution


class DegenerateFormError(GoldenOrdersError, ValueError):
    """Singular basis, Gram matrix or discriminant form"""


class OrderViolation(GoldenOrdersError):
    """
    A structure constant (or trace/norm value) of a candidate order
    leaves the coefficient ring.

    kind is one of 'product', 'conjugate', 'trace', 'norm'; i, j, k index
    the basis (j is None for conjugates and for trace/norm samples).
    """

    def __init__(self, kind, i, j, k, coefficient):
        super().__init__(f"{kind} violation at ({i}, {j}, {k}): coefficient {coefficient}")
        self.kind = kind
        self.i = i
        self.j = j
        self.k = k
        self.coefficient = coefficient


class NotInOrderError(GoldenOrdersError):
    """Element lies outside the module spanned by an order basis"""

    def __init__(self, coordinates):
        super().__init__("element is not in the order; coordinates " +
                         ", ".join(str(c) for c in coordinates))
        self.coordinates = coordinates


class InconsistencyError(GoldenOrdersError):
    """Two independent computations of the same quantity disagree"""


class UsageError(GoldenOrdersError):
    """Invalid command-line or configuration input"""


class UnknownOrderError(UsageError, KeyError):
    """Order name not in the catalog"""

    def __init__(self, name):
        super().__init__(f"unknown order '{name}'")
        self.name = name

    def __str__(self):
        return self.args[0]


class UnknownCheckError(UsageError, KeyError):
    """Check id not registered with the runner"""

    def __init__(self, check_id):
        super().__init__(f"unknown check '{check_id}'")
        self.check_id = check_id

    def __str__(self):
        return self.args[0]

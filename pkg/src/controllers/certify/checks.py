"""
The nine certificate checks.

Each check computes its counts, compares them against the oracle
constants and returns a Certificate. Oracle mismatches give FAIL
certificates; internal contradictions raise InconsistencyError.
"""

from dataclasses import dataclass
from fractions import Fraction
import hashlib
import random
from typing import Callable, Dict, List, Tuple

import numpy as np

from src.constants import oracle_constants as oc
from src.controllers.search.den2_search import DEFAULT_FILTER_ORDER, den2_search
from src.controllers.search.half_root_scan import half_root_scan
from src.controllers.search.report import FilterClass, SearchReport
from src.controllers.search.sqrt5_search import sqrt5_search
from src.controllers.search.tower_search import tower_search
from src.models.algebra import OCTONIONS, QUATERNIONS, associator, quaternion
from src.models.certificate import Certificate
from src.models.duality import (direct_sum, discriminant_group, expected_isotropic_lines,
                                golden_self_dual, polar_gram, trace_gram)
from src.models.orders.catalog import ICOSIAN_BASIS_TEXT, ORDER_NAMES, catalog
from src.models.orders.spec import OrderSpec, StructureTables, verify_order
from src.models.shells.enumeration import enumerate_unit_shell
from src.models.shells.models import h2_model, h3_model, h4_model
from src.models.shells.shell import (CoordinateSplit, RootReport, Shell, export_listing,
                                     mixed_projection_report, unit_object_summary,
                                     verify_nc_axioms, verify_root_shell)
from src.utils.errors import OrderViolation
from src.utils.logger import Logger
from src.utils.math.golden import FieldElem, GoldenInt, Ring, render_field, render_golden
from src.utils.math.golden_array import DTYPE, gmul, structure_product
from src.utils.math.matrix import Matrix, det, invert_over_ring
from src.utils.math.normal_forms import sympy_invariant_factors

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CheckOptions:
    workers: int = 1
    witnesses: str = "summary"
    random_samples: int = 1000
    seed: int = 20250101


class CheckContext:
    """Options plus the orders and shells shared between checks of one run"""

    def __init__(self, options: CheckOptions = CheckOptions()):
        self.options = options
        self.logger = Logger.instance()
        self._tables: Dict[str, StructureTables] = {}
        self._shells: Dict[str, Shell] = {}
        self._reports: Dict[str, RootReport] = {}

    def tables(self, name: str) -> StructureTables:
        if name not in self._tables:
            self._tables[name] = verify_order(catalog(name), self.options.random_samples,
                                              self.options.seed)
        return self._tables[name]

    def shell(self, name: str) -> Shell:
        if name not in self._shells:
            self._shells[name] = enumerate_unit_shell(catalog(name), self.options.workers,
                                                      self.tables(name))
        return self._shells[name]

    def root_report(self, name: str) -> RootReport:
        if name not in self._reports:
            self._reports[name] = verify_root_shell(self.shell(name))
        return self._reports[name]

    def base_parameters(self) -> dict:
        return {"witnesses": self.options.witnesses}

    def add_witnesses(self, cert: Certificate, items: List[str]):
        level = self.options.witnesses
        if level == "none":
            return
        cert.witnesses.extend(items if level == "full" else items[:1])


def _render_rows(m: Matrix) -> str:
    return ";".join(",".join(r) for r in m.render())


# ---------------------------------------------------------------------------
# p1-closure
# ---------------------------------------------------------------------------

def _random_octonions(rng: random.Random, count: int) -> np.ndarray:
    return np.array([[[rng.randint(-3, 3), rng.randint(-3, 3)] for _ in range(8)]
                     for _ in range(count)], dtype=DTYPE)


def check_p1_closure(ctx: CheckContext) -> Certificate:
    cert = Certificate("p1-closure", ctx.base_parameters())
    cert.parameters.update({"orders": list(ORDER_NAMES), "random_samples": ctx.options.random_samples,
                            "seed": ctx.options.seed, "icosian_basis": ICOSIAN_BASIS_TEXT})
    valid = 0
    for name in ORDER_NAMES:
        try:
            tables = ctx.tables(name)
        except OrderViolation as e:
            ctx.logger.error(f"{name}: {e}")
            cert.witnesses.append(f"{name}: {e}")
            continue
        valid += 1
        coefficients = [c for row in tables.mult.values() for c in row]
        cert.counts[f"{name}_structure_constants"] = len(coefficients)
    cert.expect("orders_valid", oc.CATALOG_ORDERS_VALID, valid)

    # (1, i, j, (1 + k)/2) is not closed: i * ((1 + k)/2) has coefficient 1/2
    half_basis = OrderSpec("half-k", Ring.INTEGER, QUATERNIONS,
                           (quaternion(1, 0, 0, 0), quaternion(0, 1, 0, 0), quaternion(0, 0, 1, 0),
                            quaternion(HALF, 0, 0, HALF)))
    try:
        verify_order(half_basis, samples=0)
        rejected = False
    except OrderViolation as e:
        rejected = e.kind == "product" and FieldElem.coerce(e.coefficient).a.denominator == 2
        ctx.add_witnesses(cert, [f"half-k: {e}"])
    cert.require("non_order_rejected", rejected)

    i, j, k, l = (OCTONIONS.named(s) for s in ("i", "j", "k", "l"))
    kl = OCTONIONS.named("kl")
    cert.require("associator_ijl_is_2kl", associator(i, j, l) == kl * 2)
    cert.require("i_jl_is_minus_kl", i * (j * l) == -kl)

    rng = random.Random(ctx.options.seed)
    count = oc.ALTERNATIVE_SAMPLES
    table = OCTONIONS.golden_table()
    x, y = _random_octonions(rng, count), _random_octonions(rng, count)
    xx = structure_product(x, x, table)
    yy = structure_product(y, y, table)
    xy = structure_product(x, y, table)
    yx = structure_product(y, x, table)
    left = np.array_equal(structure_product(xx, y, table), structure_product(x, xy, table))
    right = np.array_equal(structure_product(yx, x, table), structure_product(y, xx, table))
    flexible = np.array_equal(structure_product(xy, x, table), structure_product(x, yx, table))
    norms = lambda v: gmul(v, v).sum(axis=1)
    multiplicative = np.array_equal(norms(xy), gmul(norms(x), norms(y)))
    cert.counts["alternative_samples"] = count
    cert.require("left_alternative", bool(left))
    cert.require("right_alternative", bool(right))
    cert.require("flexible", bool(flexible))
    cert.require("norm_multiplicative", bool(multiplicative))
    return cert


# ---------------------------------------------------------------------------
# p2-shells
# ---------------------------------------------------------------------------

def _listing_hash(shell: Shell) -> str:
    return hashlib.sha256(export_listing(shell).encode("ascii")).hexdigest()


def _record_box_search(cert: Certificate, name: str, shell: Shell):
    """Box radii, target value and visited count of the enumeration behind a shell"""
    cert.counts[f"{name}_box_visited"] = int(shell.details.get("visited", 0))
    cert.counts[f"{name}_box_bound"] = int(shell.details.get("bound", 0))
    cert.parameters[f"{name}_box"] = [int(r) for r in shell.details.get("box", [])]


def _root_axioms(cert: Certificate, prefix: str, report: RootReport):
    cert.require(f"{prefix}_centrally_symmetric", report.centrally_symmetric)
    cert.require(f"{prefix}_reflection_closed", report.reflection_closed)
    cert.require(f"{prefix}_reflections_involutive", report.reflections_involutive)
    cert.require(f"{prefix}_cartan_sign_stable", report.cartan_sign_stable)
    cert.require(f"{prefix}_cartan_in_ring", report.cartan_in_ring)


def check_p2_shells(ctx: CheckContext) -> Certificate:
    cert = Certificate("p2-shells", ctx.base_parameters())
    listings = {}
    for name in ORDER_NAMES:
        shell = ctx.shell(name)
        report = ctx.root_report(name)
        cert.expect(f"{name}_units", oc.SHELL_SIZES[name], len(shell))
        _root_axioms(cert, name, report)
        cert.require(f"{name}_crystallographic_flag",
                     report.crystallographic == (name in oc.CRYSTALLOGRAPHIC))
        summary = unit_object_summary(shell, ctx.tables(name), ctx.options.random_samples,
                                      ctx.options.seed)
        cert.require(f"{name}_closed_under_multiplication", summary.closed_under_multiplication)
        cert.counts[f"{name}_abelian"] = int(summary.abelian)
        cert.counts[f"{name}_associative"] = int(summary.associative)
        _record_box_search(cert, name, shell)
        listings[name] = _listing_hash(shell)
        ctx.add_witnesses(cert, [f"{name}: {e.render()}" for e in shell.elements])

    models = {"H2": h2_model(), "H3": h3_model(), "H4": h4_model()}
    for label, shell in models.items():
        report = verify_root_shell(shell)
        cert.expect(f"{label}_roots", oc.MODEL_SIZES[label], len(shell))
        _root_axioms(cert, label, report)
        cert.require(f"{label}_not_crystallographic", not report.crystallographic)
        listings[label] = _listing_hash(shell)
        if label == "H2":
            values = sorted(render_golden(v.to_golden()) for v in report.cartan_values)
            cert.expect("H2_cartan_values", oc.H2_CARTAN_VALUES, values)
    h3_root = quaternion(0, HALF, FieldElem(0, HALF), FieldElem(-HALF, HALF))
    cert.require("H3_contains_half_1_phi_phiinv", h3_root in models["H3"].as_set())
    cert.require("H4_equals_icosian_units", models["H4"].as_set() == ctx.shell("icosian").as_set())

    split = CoordinateSplit.halves(OCTONIONS)
    for name, oracle in oc.MIXED_COUNTS.items():
        mixed = mixed_projection_report(ctx.shell(name), split)
        cert.expect(f"{name}_mixed", oracle, mixed.mixed_count)
    # the two H4 blocks of the icosian-double shell are orthogonal
    g0 = ctx.shell("icosian_double")
    first = [e for e in g0.elements if not any(e.coords[4:])]
    second = [e for e in g0.elements if not any(e.coords[:4])]
    cert.counts["icosian_double_first_block"] = len(first)
    cert.counts["icosian_double_second_block"] = len(second)
    cross = any(sum((a * b for a, b in zip(x.coords, y.coords)), FieldElem(0))
                for x in first for y in second)
    cert.require("icosian_double_blocks_orthogonal", not cross and len(first) == len(second) == 120)

    for name in ("icosian", "icosian_double", "gaussian"):
        axioms = verify_nc_axioms(catalog(name), ctx.shell(name), ctx.root_report(name))
        cert.require(f"{name}_nc_axioms", axioms.all_hold())
    cert.parameters["listing_sha256"] = listings
    return cert


# ---------------------------------------------------------------------------
# p3-gram and self-dual
# ---------------------------------------------------------------------------

def check_p3_gram(ctx: CheckContext) -> Certificate:
    cert = Certificate("p3-gram", ctx.base_parameters())
    cert.parameters["icosian_basis"] = ICOSIAN_BASIS_TEXT
    icosian = polar_gram(catalog("icosian"))
    g0 = polar_gram(catalog("icosian_double"))
    cert.expect("icosian_gram", oc.ICOSIAN_GRAM, icosian.matrix.render())
    cert.expect("icosian_gram_det", oc.ICOSIAN_GRAM_DET, render_golden(GoldenInt.coerce(icosian.determinant)))
    cert.require("g0_is_icosian_direct_sum", g0.matrix == direct_sum(icosian, icosian).matrix)
    g0_det = GoldenInt.coerce(g0.determinant)
    cert.expect("g0_gram_det", oc.G0_GRAM_DET, render_golden(g0_det))
    cert.expect("g0_det_field_norm", oc.G0_DET_FIELD_NORM, g0_det.norm())
    cert.expect("hamilton_gram_det", oc.HAMILTON_GRAM_DET, int(polar_gram(catalog("hamilton")).determinant))
    cert.require("integers_gram_is_2", polar_gram(catalog("integers")).matrix == Matrix([[2]]))
    for gram in (icosian, g0):
        cert.require(f"{gram.order_name}_diagonal_is_twice_norm",
                     all(gram.matrix[i, i] == (b.norm() * 2).to_golden()
                         for i, b in enumerate(catalog(gram.order_name).basis)))

    icosian_trace = trace_gram(icosian)
    g0_trace = trace_gram(g0)
    icosian_trace_det = det(Matrix(icosian_trace, Ring.INTEGER))
    g0_trace_det = det(Matrix(g0_trace, Ring.INTEGER))
    cert.expect("icosian_trace_det", oc.ICOSIAN_TRACE_DET, int(icosian_trace_det))
    cert.expect("g0_trace_det", oc.G0_TRACE_DET, int(g0_trace_det))
    cert.require("trace_det_squares", g0_trace_det == icosian_trace_det ** 2)
    cert.require("icosian_trace_even", all(icosian_trace[i][i] % 2 == 0 for i in range(len(icosian_trace))))
    for label, trace, oracle in (("icosian", icosian_trace, oc.ICOSIAN_DISCRIMINANT),
                                 ("g0", g0_trace, oc.G0_DISCRIMINANT)):
        group = discriminant_group(trace)
        cert.expect(f"{label}_discriminant", oracle, list(group.divisors))
        sympy_factors = [d for d in sympy_invariant_factors(trace) if abs(d) > 1]
        cert.require(f"{label}_smith_matches_sympy", [abs(d) for d in sympy_factors] == list(group.divisors))
    return cert


def check_self_dual(ctx: CheckContext) -> Certificate:
    cert = Certificate("self-dual", ctx.base_parameters())
    for name, expected in (("icosian", True), ("icosian_double", True), ("hamilton", False)):
        gram = polar_gram(catalog(name))
        result = golden_self_dual(gram)
        cert.require(f"{name}_self_dual" if expected else f"{name}_not_self_dual", result == expected)
        if result:
            inverse = invert_over_ring(gram.matrix, Ring.GOLDEN)
            product = gram.matrix @ inverse
            cert.require(f"{name}_inverse_verified", product == Matrix.identity(gram.rank, Ring.GOLDEN))
            ctx.add_witnesses(cert, [f"{name} inverse: {_render_rows(inverse)}"])
    cert.expect("hamilton_gram_det", oc.HAMILTON_GRAM_DET, int(polar_gram(catalog("hamilton")).determinant))
    g0_det = GoldenInt.coerce(polar_gram(catalog("icosian_double")).determinant)
    cert.expect("g0_det_field_norm", oc.G0_DET_FIELD_NORM, g0_det.norm())
    return cert


# ---------------------------------------------------------------------------
# searches
# ---------------------------------------------------------------------------

def _search_witnesses(ctx: CheckContext, cert: Certificate, report: SearchReport):
    items = [f"{o.filter_class.value}: line={list(o.line)} {o.witness or ''}".rstrip()
             for o in report.witnesses.values()]
    if ctx.options.witnesses == "full" and report.outcomes is not None:
        items += [f"{o.filter_class.value}: {list(o.line)}" for o in report.outcomes]
    ctx.add_witnesses(cert, items)


def check_p4_den2(ctx: CheckContext) -> Certificate:
    cert = Certificate("p4-den2", ctx.base_parameters())
    cert.parameters["filter_order"] = [c.value for c in DEFAULT_FILTER_ORDER]
    cert.parameters["lift"] = "a+b*phi with a,b in {0,1}"
    report = den2_search(ctx.options.workers, full=ctx.options.witnesses == "full")
    cert.counts.update(report.count_fields())
    cert.expect("total_lines", oc.DEN2_TOTAL, report.total_lines)
    cert.expect("not_mixed", oc.DEN2_NOT_MIXED, report.count(FilterClass.NOT_MIXED))
    cert.expect("conj_fail", oc.DEN2_CONJ_FAIL, report.count(FilterClass.CONJ_FAIL))
    cert.expect("pairing_fail", oc.DEN2_PAIRING_FAIL, report.count(FilterClass.PAIRING_FAIL))
    cert.expect("survivors", oc.DEN2_SURVIVORS, report.count(FilterClass.SURVIVOR))
    swapped = list(DEFAULT_FILTER_ORDER)
    swapped[1], swapped[2] = swapped[2], swapped[1]
    for label, order in (("swapped", swapped), ("reversed", list(reversed(DEFAULT_FILTER_ORDER)))):
        other = den2_search(ctx.options.workers, filter_order=order)
        cert.counts[f"survivors_{label}"] = other.count(FilterClass.SURVIVOR)
        cert.expect(f"survivors_{label}", oc.DEN2_SURVIVORS, other.count(FilterClass.SURVIVOR))
    # every nonzero F4-subspace contains a line, so no subspace survives either
    cert.require("subspace_obstruction", report.count(FilterClass.SURVIVOR) == 0)
    _search_witnesses(ctx, cert, report)
    return cert


def check_p5_sqrt5(ctx: CheckContext) -> Certificate:
    cert = Certificate("p5-sqrt5", ctx.base_parameters())
    report = sqrt5_search(ctx.options.workers, full=ctx.options.witnesses == "full")
    cert.counts.update(report.count_fields())
    cert.expect("total_lines", oc.SQRT5_TOTAL, report.total_lines)
    cert.expect("mixed_lines", oc.SQRT5_MIXED, report.extra["mixed_lines"])
    cert.expect("survivors", oc.SQRT5_SURVIVORS, report.count(FilterClass.SURVIVOR))
    cert.expect("gram_rank", oc.SQRT5_GRAM_RANK, report.extra["gram_rank_mod_sqrt5"])
    _search_witnesses(ctx, cert, report)
    return cert


def check_half_root(ctx: CheckContext, mode: str) -> Certificate:
    cert = Certificate(f"half-root-{mode}", ctx.base_parameters())
    cert.parameters["icosian_basis"] = ICOSIAN_BASIS_TEXT
    report = half_root_scan(mode, ctx.shell("icosian"), ctx.options.workers,
                            full=ctx.options.witnesses == "full")
    cert.counts.update(report.count_fields())
    extra = report.extra
    cert.expect("pairs", oc.HALF_ROOT_PAIRS, extra["pairs"])
    cert.expect("norm", oc.HALF_ROOT_NORM,
                render_field(FieldElem(Fraction(extra["norm_half_numerator"], extra["norm_half_denominator"]))))
    cert.expect("cosets", oc.HALF_ROOT_COSETS, extra["cosets"])
    cert.expect("lines", oc.HALF_ROOT_LINES, extra["lines"])
    if mode == "strict":
        cert.expect("survivors", oc.HALF_ROOT_SURVIVORS, report.count(FilterClass.SURVIVOR))
    else:
        cert.expect("trace_norm", oc.HALF_ROOT_TRACE_NORM, extra["trace_norm_value"])
        cert.expect("phi_trace", oc.HALF_ROOT_PHI_TRACE,
                    f"{extra['phi_trace_numerator']}/{extra['phi_trace_denominator']}")
        cert.expect("polar_raw", oc.HALF_ROOT_POLAR_RAW, extra["polar_raw"])
        cert.expect("polar_cosets", oc.HALF_ROOT_POLAR_COSETS, extra["polar_cosets"])
        cert.expect("module_survivors", oc.HALF_ROOT_MODULE_SURVIVORS, report.count(FilterClass.SURVIVOR))
    _search_witnesses(ctx, cert, report)
    return cert


def check_p6_tower(ctx: CheckContext) -> Certificate:
    cert = Certificate("p6-tower", ctx.base_parameters())
    tower = tower_search(ctx.options.workers, full=ctx.options.witnesses == "full")
    report = tower.report
    cert.parameters["quotient_lifts"] = tower.lifts
    cert.counts.update(report.count_fields())
    cert.counts.update({f"closure_dim_histogram_{d}": n for d, n in tower.dimension_histogram.items()})
    cert.expect("discriminant", oc.G0_DISCRIMINANT, list(tower.divisors))
    cert.expect("lines", oc.TOWER_LINES, report.extra["projective_lines"])
    cert.expect("isotropic", oc.TOWER_ISOTROPIC, report.extra["isotropic_lines"])
    cert.expect("isotropic_classified", oc.TOWER_ISOTROPIC, tower.classification.isotropic_line_count)
    cert.require("plus_type", tower.classification.witt_type == "plus")
    rank, prime = tower.classification.rank, tower.classification.prime
    cert.expect("plus_type_formula", oc.TOWER_ISOTROPIC,
                expected_isotropic_lines(rank, prime, "plus"))
    cert.expect("minus_type_formula", oc.TOWER_MINUS_ISOTROPIC,
                expected_isotropic_lines(rank, prime, "minus"))
    cert.expect("hyperbolic_rank", oc.TOWER_HYPERBOLIC_RANK, tower.classification.hyperbolic_rank)
    cert.expect("phi_scalar", oc.TOWER_PHI_SCALAR, tower.phi_scalar)
    cert.require("sqrt5_annihilates", tower.sqrt5_annihilates)
    cert.require("lifts_compatible", tower.lifts_compatible)
    cert.require("adjoint_compatible", tower.adjoint_compatible)
    cert.expect("closure_dim_8", oc.TOWER_CLOSURE_DIM8, report.extra["closure_dim_8"])
    cert.expect("candidates", oc.TOWER_CANDIDATES, report.extra["candidates"])
    ctx.add_witnesses(cert, [f"anisotropic: {list(tower.anisotropic_witness)}"])
    _search_witnesses(ctx, cert, report)
    return cert


CHECKS: Dict[str, Tuple[str, Callable[[CheckContext], Certificate]]] = {
    "p1-closure": ("order criterion for every catalog order, octonion identities",
                   check_p1_closure),
    "p2-shells": ("unit shells, root-shell axioms, H2/H3/H4 models, mixed projections",
                  check_p2_shells),
    "p3-gram": ("polar and trace Gram matrices, determinants, discriminant groups",
                check_p3_gram),
    "p4-den2": ("denominator-two lines of F4^8", check_p4_den2),
    "p5-sqrt5": ("sqrt 5 lines of F5^8", check_p5_sqrt5),
    "p6-tower": ("isotropic stable closures on the discriminant (Z/5)^8", check_p6_tower),
    "half-root-strict": ("strict mixed half-root scan", lambda ctx: check_half_root(ctx, "strict")),
    "half-root-trace": ("trace-integral mixed half-root scan", lambda ctx: check_half_root(ctx, "trace")),
    "self-dual": ("golden self-duality of the icosian ring and its double", check_self_dual),
}

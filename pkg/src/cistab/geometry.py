"""Complete-intersection systems and desk-scale smoothness certification.

Two complementary strategies stand in for an algebraically closed base:
exhaustive point enumeration over small extensions finds singular witnesses,
and a linear-algebra emptiness certificate (the singular ideal contains a
full graded piece) proves smoothness over the algebraic closure. Dimension
lower bounds come from slicing with seeded pseudorandom hyperplanes and
exhibiting points.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .fields import (
    Field,
    FieldError,
    PrimeField,
    RationalField,
    embedding,
    extension_field,
    prime_field,
)
from .linalg import Echelon
from .poly import HomogPolynomial, PolyError, monomials_of_degree
from .randpoly import random_linear_forms


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class StrategyParams:
    """Search budgets; every run is reproducible from these plus the seed."""

    max_extension: int = 3
    degree_bound: int | None = None  # default sum(d_i) + N
    seed: int = 0
    prime: int = 10007  # reduction prime for rational inputs
    point_cap: int = 10_000_000
    retries: int = 3
    cert_cell_cap: int = 60_000_000  # rows*cols budget for one certificate


@dataclass(frozen=True)
class SmoothnessVerdict:
    status: str  # smooth | singular | undetermined
    witness: tuple | None = None  # (coords, field descriptor)
    strategy_report: dict = dc_field(default_factory=dict)


class CISystem:
    """c homogeneous equations of degrees d_1 <= ... <= d_c in P^N."""

    __slots__ = ("N", "c", "degrees", "equations", "field")

    def __init__(self, N: int, equations):
        equations = list(equations)
        if not equations:
            raise GeometryError("need at least one equation")
        f = equations[0].field
        for F in equations:
            if F.field != f:
                raise GeometryError("equations over different fields")
            if F.num_vars != N + 1:
                raise GeometryError(f"equation in {F.num_vars} vars, expected {N + 1}")
            if F.is_zero():
                raise GeometryError("equations must be nonzero")
            if F.degree < 1:
                raise GeometryError("equations must have positive degree")
        c = len(equations)
        if not 1 <= c <= N:
            raise GeometryError(f"codimension {c} out of range for P^{N}")
        equations.sort(key=lambda F: F.degree)
        self.N = N
        self.c = c
        self.degrees = tuple(F.degree for F in equations)
        self.equations = tuple(equations)
        self.field = f

    def jacobian(self):
        return [
            [F.partial_derivative(j) for j in range(self.N + 1)]
            for F in self.equations
        ]

    def __repr__(self):
        return (
            f"<CI system c={self.c} degrees={self.degrees} in P^{self.N} "
            f"over {self.field.descriptor}>"
        )


def reduce_mod_prime(sys: CISystem, p: int) -> CISystem:
    """Reduce a rational system modulo p; denominators prime to p required."""
    if not isinstance(sys.field, RationalField):
        raise GeometryError("reduction applies to rational systems only")
    Fp = prime_field(p)

    def red(q):
        if q.denominator % p == 0:
            raise GeometryError(f"denominator of {q} not invertible mod {p}")
        return (q.numerator * pow(q.denominator, p - 2, p)) % p

    eqs = [F.map_coeffs(red, Fp) for F in sys.equations]
    if any(F.is_zero() for F in eqs):
        raise GeometryError(f"an equation vanishes mod {p}; choose another prime")
    return CISystem(sys.N, eqs)


# -- point enumeration --------------------------------------------------------


def projective_point_count(q: int, N: int) -> int:
    return (q ** (N + 1) - 1) // (q - 1)


def projective_points(field: Field, N: int):
    """Canonical representatives: first nonzero coordinate equals one."""
    elems = list(field.elements())
    one, zero = field.one, field.zero
    for pivot in range(N + 1):
        free = N - pivot
        for tail in itertools.product(elems, repeat=free):
            yield (zero,) * pivot + (one,) + tail


def _extension_tower(base: Field, k: int):
    """The degree-k extension of a finite base field, with the embedding."""
    if isinstance(base, PrimeField):
        ext = extension_field(base.p, k) if k > 1 else base
    else:
        ext = extension_field(base.p, base.k * k)
    return ext, embedding(base, ext)


def _scalar_matrix_rank(rows, field) -> int:
    if not rows:
        return 0
    ech = Echelon(field, len(rows[0]))
    for r in rows:
        ech.insert(list(r))
    return ech.rank


def _point_powers(coords, maxdeg, field):
    powers = []
    for x in coords:
        row = [field.one]
        for _ in range(maxdeg):
            row.append(field.mul(row[-1], x))
        powers.append(row)
    return powers


def _eval_with_powers(F, powers, field, embed):
    acc = field.zero
    for exp, c in F.terms.items():
        term = embed(c)
        for i, e in enumerate(exp):
            if e:
                term = field.mul(term, powers[i][e])
        acc = field.add(acc, term)
    return acc


def find_common_point(polys, base_field, N, strategy: StrategyParams):
    """First point of V(polys) over F_{q^k}, k <= max_extension, or None.

    Returns (coords, ext_field, k). Enumeration skips extensions whose
    projective point count exceeds the cap, so None is evidence, not proof.
    """
    if base_field.order is None:
        raise GeometryError("point enumeration needs a finite field")
    maxdeg = max((F.degree for F in polys), default=0)
    for k in range(1, strategy.max_extension + 1):
        ext, embed = _extension_tower(base_field, k)
        if projective_point_count(ext.order, N) > strategy.point_cap:
            continue
        for coords in projective_points(ext, N):
            powers = _point_powers(coords, maxdeg, ext)
            if all(
                _eval_with_powers(F, powers, ext, embed) == ext.zero for F in polys
            ):
                return coords, ext, k
    return None


# -- singular locus -----------------------------------------------------------


def _poly_minor(matrix, rows, cols):
    """Determinant of a small polynomial matrix by cofactor expansion."""
    if len(rows) == 1:
        return matrix[rows[0]][cols[0]]
    first = rows[0]
    acc = None
    for pos, col in enumerate(cols):
        entry = matrix[first][col]
        if entry.is_zero():
            continue
        sub = _poly_minor(matrix, rows[1:], cols[:pos] + cols[pos + 1 :])
        term = entry * sub
        if pos % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        zero_deg = sum(matrix[r][cols[0]].degree for r in rows)
        F0 = matrix[rows[0]][cols[0]]
        return HomogPolynomial.zero(F0.field, F0.num_vars, zero_deg)
    return acc


def singular_ideal_generators(sys: CISystem):
    """Equations plus all c x c Jacobian minors: cuts the singular points."""
    jac = sys.jacobian()
    gens = list(sys.equations)
    rows = tuple(range(sys.c))
    for cols in itertools.combinations(range(sys.N + 1), sys.c):
        m = _poly_minor(jac, rows, tuple(cols))
        if not m.is_zero():
            gens.append(m)
    return gens


def jacobian_rank_at(sys: CISystem, coords, ext, embed) -> int:
    jac = sys.jacobian()
    maxdeg = max(sys.degrees)
    powers = _point_powers(coords, maxdeg, ext)
    rows = [
        [_eval_with_powers(e, powers, ext, embed) for e in row] for row in jac
    ]
    return _scalar_matrix_rank(rows, ext)


def verify_singular_witness(sys: CISystem, coords, ext) -> bool:
    """Re-check: every equation vanishes and the Jacobian rank drops."""
    embed = embedding(sys.field, ext)
    maxdeg = max(sys.degrees)
    powers = _point_powers(coords, maxdeg, ext)
    on_all = all(
        _eval_with_powers(F, powers, ext, embed) == ext.zero for F in sys.equations
    )
    return on_all and jacobian_rank_at(sys, coords, ext, embed) < sys.c


def find_singular_point(sys: CISystem, strategy: StrategyParams, ks=None):
    """Scan P^N(F_{q^k}) for a point on Z where the Jacobian rank < c."""
    base = sys.field
    if base.order is None:
        raise GeometryError("witness search needs a finite field")
    maxdeg = max(sys.degrees)
    jac = sys.jacobian()
    ks = ks if ks is not None else range(1, strategy.max_extension + 1)
    scanned = 0
    for k in ks:
        ext, embed = _extension_tower(base, k)
        if projective_point_count(ext.order, sys.N) > strategy.point_cap:
            continue
        for coords in projective_points(ext, sys.N):
            scanned += 1
            powers = _point_powers(coords, maxdeg, ext)
            if any(
                _eval_with_powers(F, powers, ext, embed) != ext.zero
                for F in sys.equations
            ):
                continue
            rows = [
                [_eval_with_powers(e, powers, ext, embed) for e in row]
                for row in jac
            ]
            if _scalar_matrix_rank(rows, ext) < sys.c:
                return coords, ext, k, scanned
    return None, None, None, scanned


# -- emptiness certificate ----------------------------------------------------


def graded_piece_full(gens, num_vars, D: int, cell_cap=None):
    """True iff the span of {M * g : deg M = D - deg g} is all of degree D.

    Certifies (projective Nullstellensatz) that V(gens) is empty over the
    algebraic closure when it holds for some D. Returns None when the
    elimination budget is exceeded.
    """
    fieldobj = gens[0].field
    order = monomials_of_degree(num_vars, D)
    index = {exp: j for j, exp in enumerate(order)}
    ncols = len(order)
    nrows = sum(
        len(monomials_of_degree(num_vars, D - g.degree))
        for g in gens
        if g.degree <= D
    )
    if cell_cap is not None and nrows * ncols > cell_cap:
        return None
    ech = Echelon(fieldobj, ncols)
    for g in gens:
        if g.degree > D:
            continue
        for mult in monomials_of_degree(num_vars, D - g.degree):
            vec = [fieldobj.zero] * ncols
            for exp, c in g.terms.items():
                vec[index[tuple(a + b for a, b in zip(exp, mult))]] = c
            ech.insert(vec)
            if ech.rank == ncols:
                return True
    return False


def emptiness_certificate(gens, num_vars, strategy: StrategyParams, degree_bound):
    """Least D <= bound with a full graded piece, or None."""
    start = max(1, min(g.degree for g in gens))
    for D in range(start, degree_bound + 1):
        res = graded_piece_full(gens, num_vars, D, strategy.cert_cell_cap)
        if res:
            return D
    return None


# -- public operations --------------------------------------------------------


def _default_degree_bound(sys: CISystem, strategy: StrategyParams) -> int:
    if strategy.degree_bound is not None:
        return strategy.degree_bound
    return sum(sys.degrees) + sys.N


def _finite_model(sys: CISystem, strategy: StrategyParams):
    """The system itself, or its reduction mod the strategy prime over Q."""
    if isinstance(sys.field, RationalField):
        return reduce_mod_prime(sys, strategy.prime), strategy.prime
    return sys, None


def smoothness_check(sys: CISystem, strategy: StrategyParams = StrategyParams()):
    """Certify smoothness over the closure or exhibit a singular witness.

    Order of attack: scan rational points for a witness, then climb the
    certificate ladder, then scan small extensions. Anything left is
    reported undetermined, never guessed.
    """
    model, used_prime = _finite_model(sys, strategy)
    report: dict = {"prime": used_prime}
    gens = singular_ideal_generators(model)
    coords, ext, k, scanned = find_singular_point(model, strategy, ks=[1])
    report["points_scanned"] = scanned
    if coords is not None:
        report["stage"] = "base-field scan"
        report["extension"] = k
        return SmoothnessVerdict("singular", (coords, ext.descriptor), report)
    bound = _default_degree_bound(model, strategy)
    D = emptiness_certificate(gens, model.N + 1, strategy, bound)
    if D is not None:
        report["stage"] = "emptiness certificate"
        report["certificate_degree"] = D
        return SmoothnessVerdict("smooth", None, report)
    coords, ext, k, scanned2 = find_singular_point(
        model, strategy, ks=range(2, strategy.max_extension + 1)
    )
    report["points_scanned"] = scanned + scanned2
    if coords is not None:
        report["stage"] = "extension scan"
        report["extension"] = k
        return SmoothnessVerdict("singular", (coords, ext.descriptor), report)
    report["stage"] = "exhausted"
    report["degree_bound"] = bound
    return SmoothnessVerdict("undetermined", None, report)


def is_complete_intersection(sys: CISystem, strategy: StrategyParams = StrategyParams()):
    """True/False/None: does V(equations) have codimension exactly c?

    Emptiness of the system cut by N-c+1 hyperplanes proves dim <= N-c (and
    dim >= N-c always holds), so a certificate on any slice answers True.
    Points found on every sliced retry answer False; otherwise None.
    """
    model, _ = _finite_model(sys, strategy)
    n = model.N + 1
    cut = model.N - model.c + 1
    bound = _default_degree_bound(model, strategy)
    for attempt in range(strategy.retries):
        rng = random.Random(strategy.seed * 1_000_003 + 7919 * attempt + 1)
        linears = random_linear_forms(rng, model.field, n, cut)
        gens = list(model.equations) + linears
        if emptiness_certificate(gens, n, strategy, bound) is not None:
            return True
    found_every_time = True
    for attempt in range(strategy.retries):
        rng = random.Random(strategy.seed * 1_000_003 + 7919 * attempt + 2)
        linears = random_linear_forms(rng, model.field, n, cut)
        hit = find_common_point(
            list(model.equations) + linears, model.field, model.N, strategy
        )
        if hit is None:
            found_every_time = False
            break
    if found_every_time:
        return False
    return None


def _as_system(sys_or_poly, N=None) -> CISystem:
    if isinstance(sys_or_poly, CISystem):
        return sys_or_poly
    F = sys_or_poly
    return CISystem(F.num_vars - 1, [F])


def singular_section_dimension(
    sys_or_poly, v: int, strategy: StrategyParams = StrategyParams()
) -> int:
    """Certified-by-points lower bound on dim(Sing cap {X_0=...=X_{v-1}=0}).

    Returns the largest k such that slicing by k seeded hyperplanes still
    exhibits a point on every retry; -1 when no point is found at all.
    """
    sys = _as_system(sys_or_poly)
    model, _ = _finite_model(sys, strategy)
    if not 0 <= v <= model.N:
        raise GeometryError(f"flag depth {v} out of range")
    n = model.N + 1
    gens = singular_ideal_generators(model)
    for j in range(v):
        gens.append(HomogPolynomial.variable(model.field, n, j))
    best = -1
    for k in range(0, model.N + 1):
        ok = True
        for attempt in range(strategy.retries):
            rng = random.Random(
                strategy.seed * 1_000_003 + 104_729 * k + 7919 * attempt + 3
            )
            slicing = random_linear_forms(rng, model.field, n, k)
            if find_common_point(gens + slicing, model.field, model.N, strategy) is None:
                ok = False
                break
        if not ok:
            break
        best = k
    return best

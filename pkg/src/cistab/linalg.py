"""Exact row reduction over ordered monomial bases.

Vectors are lists of field values aligned with an explicit monomial order.
The incremental echelon keeps full reduced form (pivots 1, pivot columns
clear elsewhere) so subspace objects are canonical and idempotent under
re-reduction.
"""

from __future__ import annotations

from .fields import Field
from .poly import HomogPolynomial, PolyError, grevlex_key, monomials_of_degree


class LinAlgError(ValueError):
    pass


class Echelon:
    """Incremental reduced row echelon form with optional combo tracking."""

    def __init__(self, field: Field, ncols: int, track: bool = False):
        self.field = field
        self.ncols = ncols
        self.track = track
        self.rows: list[list] = []
        self.pivots: list[int] = []
        self.combos: list[list] = []
        self._n_inputs = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _new_combo(self):
        return [self.field.zero] * self._n_inputs

    def reduce(self, vec, combo=None):
        """Reduce vec against current rows; returns (residue, combo)."""
        f = self.field
        vec = list(vec)
        if self.track:
            combo = list(combo) if combo is not None else self._new_combo()
            while len(combo) < self._n_inputs:
                combo.append(f.zero)
        for i, p in enumerate(self.pivots):
            c = vec[p]
            if c == f.zero:
                continue
            row = self.rows[i]
            for j in range(p, self.ncols):
                rj = row[j]
                if rj != f.zero:
                    vec[j] = f.sub(vec[j], f.mul(c, rj))
            if self.track:
                rc = self.combos[i]
                for j in range(len(rc)):
                    if rc[j] != f.zero:
                        combo[j] = f.sub(combo[j], f.mul(c, rc[j]))
        return vec, combo

    def insert(self, vec, tag_input: bool = True):
        """Add a vector; returns None if dependent, else its pivot column.

        When tracking, each stored row records its expression over the
        inputs; a dependent vector's combo expresses the zero vector with a
        nonzero coefficient on the newest input.
        """
        f = self.field
        combo = None
        if self.track:
            if tag_input:
                for c in self.combos:
                    c.append(f.zero)
                combo = [f.zero] * self._n_inputs + [f.one]
                self._n_inputs += 1
        vec, combo = self.reduce(vec, combo)
        pivot = None
        for j in range(self.ncols):
            if vec[j] != f.zero:
                pivot = j
                break
        if pivot is None:
            self._last_dependency = combo
            return None
        inv = f.inv(vec[pivot])
        vec = [f.mul(inv, x) for x in vec]
        if self.track:
            combo = [f.mul(inv, x) for x in combo]
        # clear the new pivot column from existing rows
        for i, row in enumerate(self.rows):
            c = row[pivot]
            if c == f.zero:
                continue
            for j in range(pivot, self.ncols):
                if vec[j] != f.zero:
                    row[j] = f.sub(row[j], f.mul(c, vec[j]))
            if self.track:
                rc = self.combos[i]
                for j in range(len(combo)):
                    if combo[j] != f.zero:
                        rc[j] = f.sub(rc[j], f.mul(c, combo[j]))
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < pivot:
            pos += 1
        self.rows.insert(pos, vec)
        self.pivots.insert(pos, pivot)
        if self.track:
            self.combos.insert(pos, combo)
        return pivot


def rref(rows, field: Field, ncols=None):
    """Reduced echelon form; returns (rows, pivots) sorted by pivot column."""
    if ncols is None:
        if not rows:
            return [], []
        ncols = len(rows[0])
    ech = Echelon(field, ncols)
    for r in rows:
        ech.insert(r)
    return [list(r) for r in ech.rows], list(ech.pivots)


def rank_of(rows, field: Field, ncols=None) -> int:
    return len(rref(rows, field, ncols)[0])


def find_dependency(rows, field: Field, ncols=None):
    """First dependency among rows in input order, or None.

    Returns coefficients lam (length = rows consumed so far) with
    sum lam_i * rows_i = 0 and lam nonzero on the last consumed row.
    """
    if not rows:
        return None
    if ncols is None:
        ncols = len(rows[0])
    ech = Echelon(field, ncols, track=True)
    for idx, r in enumerate(rows):
        if ech.insert(r) is None:
            lam = ech._last_dependency
            return lam + [field.zero] * (len(rows) - len(lam))
    return None


def solve_combination(generators, target, field: Field, ncols=None):
    """Coefficients g with target = sum g_i * generators_i, or None."""
    if ncols is None:
        ncols = len(target)
    ech = Echelon(field, ncols, track=True)
    for g in generators:
        ech.insert(g)
    residue, combo = ech.reduce(target)
    if any(x != field.zero for x in residue):
        return None
    # residue = target - sum combo'_i rows_i was computed with combo starting
    # at zero, so target = -(combo) expressed over inputs
    return [field.neg(x) for x in combo]


# -- polynomial-facing layer --------------------------------------------------


def poly_to_vector(F: HomogPolynomial, index: dict):
    vec = [F.field.zero] * len(index)
    for exp, c in F.terms.items():
        vec[index[exp]] = c
    return vec


def vector_to_poly(vec, order, field, num_vars, degree) -> HomogPolynomial:
    terms = {order[j]: c for j, c in enumerate(vec) if c != field.zero}
    return HomogPolynomial(field, num_vars, degree, terms)


class LinearSubspace:
    """Row-reduced subspace of the degree-l forms over an ordered basis."""

    __slots__ = ("field", "num_vars", "degree", "monomial_order", "rows", "pivots")

    def __init__(self, field, num_vars, degree, monomial_order, rows, pivots):
        self.field = field
        self.num_vars = num_vars
        self.degree = degree
        self.monomial_order = tuple(monomial_order)
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def index(self) -> dict:
        return {exp: j for j, exp in enumerate(self.monomial_order)}

    def basis_polynomials(self):
        return [
            vector_to_poly(r, self.monomial_order, self.field, self.num_vars, self.degree)
            for r in self.rows
        ]

    def pivot_monomials(self):
        return [self.monomial_order[p] for p in self.pivots]

    def contains(self, F: HomogPolynomial) -> bool:
        if F.is_zero():
            return True
        residue = self.reduce_poly(F)
        return residue.is_zero()

    def reduce_poly(self, F: HomogPolynomial) -> HomogPolynomial:
        if F.field != self.field or F.num_vars != self.num_vars:
            raise PolyError("subspace and polynomial live in different spaces")
        if F.degree != self.degree and not F.is_zero():
            raise PolyError("degree mismatch against subspace")
        ech = Echelon(self.field, len(self.monomial_order))
        ech.rows = [list(r) for r in self.rows]
        ech.pivots = list(self.pivots)
        vec, _ = ech.reduce(poly_to_vector(F, self.index))
        return vector_to_poly(
            vec, self.monomial_order, self.field, self.num_vars, self.degree
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinearSubspace)
            and self.field == other.field
            and self.monomial_order == other.monomial_order
            and self.rows == other.rows
        )

    def __repr__(self):
        return (
            f"<subspace rank {self.rank} of degree-{self.degree} forms in "
            f"{self.num_vars} vars over {self.field.descriptor}>"
        )


def row_reduce(polys, monomial_order=None) -> LinearSubspace:
    """Reduced echelon basis of the span of equal-degree polynomials."""
    polys = list(polys)
    if not polys:
        raise LinAlgError("row_reduce needs at least one polynomial")
    field = polys[0].field
    num_vars = polys[0].num_vars
    degree = polys[0].degree
    for F in polys:
        if F.field != field or F.num_vars != num_vars or F.degree != degree:
            raise LinAlgError("inconsistent inputs to row_reduce")
    if monomial_order is None:
        monomial_order = monomials_of_degree(num_vars, degree)
    index = {exp: j for j, exp in enumerate(monomial_order)}
    ech = Echelon(field, len(monomial_order))
    for F in polys:
        ech.insert(poly_to_vector(F, index))
    return LinearSubspace(field, num_vars, degree, monomial_order, ech.rows, ech.pivots)

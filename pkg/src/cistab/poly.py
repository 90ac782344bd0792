"""Sparse homogeneous polynomials in X_0..X_N with exact coefficients.

A polynomial is a map from exponent tuples to nonzero field values, plus a
declared total degree so the zero polynomial still carries its degree. All
operations return new canonical polynomials; instances are treated as
immutable.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .fields import Field, FieldError

Monomial = tuple  # tuple of nonnegative ints, one per variable


class PolyError(ValueError):
    """Degree mismatch, bad variable index, or cross-field arithmetic."""


class PolyParseError(PolyError):
    """Input text outside the polynomial grammar."""


def grevlex_key(exp: Monomial):
    """Sort key: ascending on this key = descending graded reverse lex."""
    return (-sum(exp), tuple(reversed(exp)))


@lru_cache(maxsize=None)
def monomials_of_degree(num_vars: int, degree: int) -> tuple:
    """All exponent tuples of the given total degree, grevlex descending."""
    if degree < 0:
        return ()

    def gen(vars_left, total):
        if vars_left == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in gen(vars_left - 1, total - first):
                yield (first,) + rest

    return tuple(sorted(gen(num_vars, degree), key=grevlex_key))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class HomogPolynomial:
    __slots__ = ("field", "num_vars", "degree", "terms")

    def __init__(self, field: Field, num_vars: int, degree: int, terms: dict):
        if num_vars < 1:
            raise PolyError("need at least one variable")
        if degree < 0:
            raise PolyError("degree must be nonnegative")
        clean = {}
        for exp, coeff in terms.items():
            if len(exp) != num_vars:
                raise PolyError(f"exponent {exp} has wrong arity for {num_vars} vars")
            if any(e < 0 for e in exp):
                raise PolyError(f"negative exponent in {exp}")
            if sum(exp) != degree:
                raise PolyError(
                    f"monomial {exp} has degree {sum(exp)}, expected {degree}"
                )
            if coeff != field.zero:
                clean[exp] = coeff
        self.field = field
        self.num_vars = num_vars
        self.degree = degree
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field, num_vars, degree=0):
        return cls(field, num_vars, degree, {})

    @classmethod
    def variable(cls, field, num_vars, j):
        if not 0 <= j < num_vars:
            raise PolyError(f"variable index {j} out of range")
        exp = tuple(1 if i == j else 0 for i in range(num_vars))
        return cls(field, num_vars, 1, {exp: field.one})

    @classmethod
    def monomial(cls, field, exp, coeff=None):
        coeff = field.one if coeff is None else coeff
        return cls(field, len(exp), sum(exp), {tuple(exp): coeff})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp):
        return self.terms.get(tuple(exp), self.field.zero)

    def monomials(self):
        return self.terms.keys()

    def _check_compatible(self, other, need_equal_degree):
        if self.field != other.field:
            raise PolyError(
                f"field mismatch: {self.field.descriptor} vs {other.field.descriptor}"
            )
        if self.num_vars != other.num_vars:
            raise PolyError("different numbers of variables")
        if need_equal_degree and self.degree != other.degree:
            raise PolyError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        self._check_compatible(other, need_equal_degree=True)
        f = self.field
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            acc = f.add(terms.get(exp, f.zero), c)
            if acc == f.zero:
                terms.pop(exp, None)
            else:
                terms[exp] = acc
        return HomogPolynomial(f, self.num_vars, self.degree, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return HomogPolynomial(
            f, self.num_vars, self.degree,
            {exp: f.neg(c) for exp, c in self.terms.items()},
        )

    def scale(self, scalar):
        f = self.field
        if scalar == f.zero:
            return HomogPolynomial.zero(f, self.num_vars, self.degree)
        return HomogPolynomial(
            f, self.num_vars, self.degree,
            {exp: f.mul(c, scalar) for exp, c in self.terms.items()},
        )

    def __mul__(self, other):
        self._check_compatible(other, need_equal_degree=False)
        f = self.field
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = monomial_mul(e1, e2)
                acc = f.add(terms.get(exp, f.zero), f.mul(c1, c2))
                if acc == f.zero:
                    terms.pop(exp, None)
                else:
                    terms[exp] = acc
        return HomogPolynomial(f, self.num_vars, self.degree + other.degree, terms)

    def mul_monomial(self, exp, coeff=None):
        f = self.field
        coeff = f.one if coeff is None else coeff
        exp = tuple(exp)
        return HomogPolynomial(
            f, self.num_vars, self.degree + sum(exp),
            {monomial_mul(e, exp): f.mul(c, coeff) for e, c in self.terms.items()},
        )

    def partial_derivative(self, j: int):
        if not 0 <= j < self.num_vars:
            raise PolyError(f"variable index {j} out of range")
        f = self.field
        terms = {}
        for exp, c in self.terms.items():
            if exp[j] == 0:
                continue
            coeff = f.mul(c, f.from_int(exp[j]))
            if coeff == f.zero:
                continue  # characteristic p can kill the term
            new = list(exp)
            new[j] -= 1
            terms[tuple(new)] = coeff
        return HomogPolynomial(f, self.num_vars, max(self.degree - 1, 0), terms)

    def evaluate(self, coords, out_field=None, embed=None):
        """Evaluate at a point with coordinates in out_field.

        `embed` maps coefficients of self into out_field (identity by
        default, valid when the fields agree).
        """
        f = out_field if out_field is not None else self.field
        if embed is None:
            if f != self.field:
                raise PolyError("embed map required across fields")
            embed = lambda a: a
        maxdeg = self.degree
        powers = []
        for x in coords:
            row = [f.one]
            for _ in range(maxdeg):
                row.append(f.mul(row[-1], x))
            powers.append(row)
        acc = f.zero
        for exp, c in self.terms.items():
            term = embed(c)
            for i, e in enumerate(exp):
                if e:
                    term = f.mul(term, powers[i][e])
            acc = f.add(acc, term)
        return acc

    def map_coeffs(self, fn, new_field):
        terms = {}
        for exp, c in self.terms.items():
            v = fn(c)
            if v != new_field.zero:
                terms[exp] = v
        return HomogPolynomial(new_field, self.num_vars, self.degree, terms)

    def permute_vars(self, perm):
        """Relabel variables: new exponent i is old exponent perm[i]."""
        if sorted(perm) != list(range(self.num_vars)):
            raise PolyError("not a permutation")
        terms = {
            tuple(exp[perm[i]] for i in range(self.num_vars)): c
            for exp, c in self.terms.items()
        }
        return HomogPolynomial(self.field, self.num_vars, self.degree, terms)

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, HomogPolynomial)
            and self.field == other.field
            and self.num_vars == other.num_vars
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (self.field, self.num_vars, self.degree, frozenset(self.terms.items()))
        )

    def __repr__(self):
        return f"<{poly_print(self)} over {self.field.descriptor}>"


def poly_arith(op: str, a: HomogPolynomial, b):
    """Named arithmetic surface: op in {add, sub, mul, scale}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise PolyError(f"unknown operation {op!r}")


def partial_derivative(F: HomogPolynomial, j: int) -> HomogPolynomial:
    return F.partial_derivative(j)


# -- text grammar -----------------------------------------------------------

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _split_signed(text: str):
    """Split on top-level + and -, returning (sign, term-text) pairs."""
    out = []
    sign = 1
    buf = []
    started = False
    for ch in text:
        if ch in "+-" and started and buf:
            out.append((sign, "".join(buf).strip()))
            sign = 1 if ch == "+" else -1
            buf = []
        elif ch in "+-" and not buf:
            sign = sign * (1 if ch == "+" else -1)
            started = True
        else:
            buf.append(ch)
            started = True
    if buf:
        out.append((sign, "".join(buf).strip()))
    return out


def poly_parse(text: str, num_vars: int, field: Field, degree=None) -> HomogPolynomial:
    """Parse `3*x0^2*x1 - x2^3` style text into canonical sparse form.

    Terms share one total degree; the zero polynomial takes the supplied
    degree (default 0).
    """
    text = text.strip()
    if not text:
        raise PolyParseError("empty polynomial text")
    pieces = _split_signed(text)
    if not pieces:
        raise PolyParseError(f"cannot parse {text!r}")
    term_degree = None
    acc: dict = {}
    for sign, piece in pieces:
        if not piece:
            raise PolyParseError(f"dangling sign in {text!r}")
        coeff = field.one
        exp = [0] * num_vars
        has_var = False
        factors = [p.strip() for p in piece.split("*")]
        for pos, factor in enumerate(factors):
            if not factor:
                raise PolyParseError(f"empty factor in term {piece!r}")
            m = _FACTOR_RE.match(factor)
            if m:
                idx, e = int(m.group(1)), int(m.group(2) or 1)
                if idx >= num_vars:
                    raise PolyParseError(
                        f"variable x{idx} out of range for {num_vars} variables"
                    )
                exp[idx] += e
                has_var = True
            else:
                if pos != 0 or has_var:
                    raise PolyParseError(f"bad factor {factor!r} in term {piece!r}")
                coeff = field.parse_coeff(factor)
        if sign < 0:
            coeff = field.neg(coeff)
        d = sum(exp)
        if not has_var and coeff == field.zero:
            continue  # bare 0 term carries no degree information
        if term_degree is None:
            term_degree = d
        elif term_degree != d:
            raise PolyParseError(
                f"mixed degrees {term_degree} and {d} in {text!r}"
            )
        key = tuple(exp)
        total = field.add(acc.get(key, field.zero), coeff)
        if total == field.zero:
            acc.pop(key, None)
        else:
            acc[key] = total
    if term_degree is None:
        term_degree = degree if degree is not None else 0
    if degree is not None and acc and term_degree != degree:
        raise PolyParseError(
            f"expected degree {degree}, found {term_degree} in {text!r}"
        )
    return HomogPolynomial(field, num_vars, term_degree, acc)


def poly_print(F: HomogPolynomial) -> str:
    """Canonical text form; poly_parse(poly_print(F)) == F."""
    if F.is_zero():
        return "0"
    field = F.field
    parts = []
    for exp in sorted(F.terms, key=grevlex_key):
        coeff = F.terms[exp]
        text = field.format_coeff(coeff)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        factors = []
        for i, e in enumerate(exp):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        if factors and text == "1":
            body = "*".join(factors)
        elif factors:
            body = text + "*" + "*".join(factors)
        else:
            body = text
        if not parts:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)

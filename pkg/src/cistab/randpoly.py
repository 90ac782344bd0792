"""Seeded pseudorandom forms and matrices for witness generation and fuzzing."""

from __future__ import annotations

import random

from .fields import Field
from .poly import HomogPolynomial, monomials_of_degree


def random_homog(
    rng: random.Random,
    field: Field,
    num_vars: int,
    degree: int,
    allowed_vars=None,
    density: float | None = None,
) -> HomogPolynomial:
    """Nonzero random form; optionally supported on a variable subset.

    density, when given, is the per-monomial keep probability in 1/64ths to
    stay off floating point: pass e.g. 32 for about half the monomials.
    """
    if allowed_vars is None:
        mons = monomials_of_degree(num_vars, degree)
    else:
        allowed = set(allowed_vars)
        mons = tuple(
            exp
            for exp in monomials_of_degree(num_vars, degree)
            if all(e == 0 or i in allowed for i, e in enumerate(exp))
        )
    if not mons:
        raise ValueError("no monomials available under the variable restriction")
    while True:
        terms = {}
        for exp in mons:
            if density is not None and rng.randrange(64) >= density:
                continue
            c = field.random_element(rng)
            if c != field.zero:
                terms[exp] = c
        if terms:
            return HomogPolynomial(field, num_vars, degree, terms)


def random_linear_forms(rng, field, num_vars, count):
    return [random_homog(rng, field, num_vars, 1) for _ in range(count)]


def random_invertible_matrix(rng, field, size):
    """Random size x size invertible matrix over the field."""
    from .linalg import rank_of

    while True:
        m = [[field.random_element(rng) for _ in range(size)] for _ in range(size)]
        if rank_of([row[:] for row in m], field, size) == size:
            return m

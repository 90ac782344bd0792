"""Exact GIT stability computations for complete intersections in P^N."""

from .fields import (
    Field,
    FieldError,
    extension_field,
    field_from_descriptor,
    prime_field,
    rationals,
)
from .poly import (
    HomogPolynomial,
    PolyError,
    PolyParseError,
    monomials_of_degree,
    poly_arith,
    poly_parse,
    poly_print,
)
from .linalg import LinearSubspace, row_reduce
from .weights import (
    NEG_INFINITY,
    SingularityProfile,
    WeightVector,
    WeightVectorError,
    alpha_degree,
    enumerate_weight_vectors,
    leading_form,
    singdeg_predicate,
    singularity_profile,
)

__version__ = "0.1.0"

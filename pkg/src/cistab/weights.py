"""Diagonal one-parameter-subgroup weights and the degree machinery on them.

A weight vector is a nondecreasing tuple of integers, not all zero, summing
to zero. The weighted degree of a nonzero form is the maximum weighted
degree of its monomials; the zero polynomial gets a distinguished sentinel
below every integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import HomogPolynomial, PolyError


class WeightVectorError(ValueError):
    """Names the violated weight-vector invariant."""


class _NegInfinity:
    """Sentinel for the degree of the zero polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("cistab-neg-infinity")

    def __repr__(self):
        return "-infinity"


NEG_INFINITY = _NegInfinity()


def is_neg_infinity(value) -> bool:
    return value is NEG_INFINITY


@dataclass(frozen=True)
class WeightVector:
    alphas: tuple

    def __post_init__(self):
        alphas = tuple(int(a) for a in self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if len(alphas) < 2:
            raise WeightVectorError("need at least two weights")
        if any(alphas[i] > alphas[i + 1] for i in range(len(alphas) - 1)):
            raise WeightVectorError("weights must be nondecreasing")
        if all(a == 0 for a in alphas):
            raise WeightVectorError("weights must not all be zero")
        if sum(alphas) != 0:
            raise WeightVectorError(f"weights must sum to zero, got {sum(alphas)}")

    @classmethod
    def from_values(cls, values, sort: bool = True, shift: bool = False):
        """Validate raw integers; optionally sort and shift to sum zero.

        The shift subtracts the mean and is rejected when the sum is not
        divisible by the length (rescaling would change mu values silently).
        """
        values = [int(v) for v in values]
        if sort:
            values = sorted(values)
        if shift:
            total = sum(values)
            n = len(values)
            if total % n != 0:
                raise WeightVectorError(
                    f"sum {total} not divisible by {n}; cannot shift to zero"
                )
            values = [v - total // n for v in values]
        return cls(tuple(values))

    @property
    def num_vars(self) -> int:
        return len(self.alphas)

    @property
    def N(self) -> int:
        return len(self.alphas) - 1

    def monomial_degree(self, exp) -> int:
        return sum(a * e for a, e in zip(self.alphas, exp))

    def scaled(self, m: int) -> "WeightVector":
        if m <= 0:
            raise WeightVectorError("scale factor must be positive")
        return WeightVector(tuple(m * a for a in self.alphas))

    def reversed_negated(self) -> "WeightVector":
        return WeightVector(tuple(-a for a in reversed(self.alphas)))

    def __iter__(self):
        return iter(self.alphas)

    def __getitem__(self, i):
        return self.alphas[i]


def weighted_monomial_degree(weights, exp) -> int:
    return sum(a * e for a, e in zip(weights, exp))


def weighted_degree(weights, F: HomogPolynomial):
    """Max weighted monomial degree of F; weights need not be sorted."""
    if len(weights) != F.num_vars:
        raise PolyError(
            f"{len(weights)} weights vs {F.num_vars} variables"
        )
    if F.is_zero():
        return NEG_INFINITY
    return max(weighted_monomial_degree(weights, exp) for exp in F.terms)


def alpha_degree(alpha: WeightVector, F: HomogPolynomial):
    """Max alpha-degree over the monomials of F; the sentinel for F = 0."""
    return weighted_degree(alpha.alphas, F)


def leading_form(alpha: WeightVector, F: HomogPolynomial) -> HomogPolynomial:
    """Sum of the terms of F achieving alpha_degree(alpha, F)."""
    if F.is_zero():
        raise PolyError("the zero polynomial has no leading form")
    if alpha.num_vars != F.num_vars:
        raise PolyError("weight vector and polynomial dimensions differ")
    top = alpha_degree(alpha, F)
    terms = {
        exp: c
        for exp, c in F.terms.items()
        if alpha.monomial_degree(exp) == top
    }
    return HomogPolynomial(F.field, F.num_vars, F.degree, terms)


def is_alpha_homogeneous(alpha: WeightVector, F: HomogPolynomial) -> bool:
    return not F.is_zero() and leading_form(alpha, F) == F


def alpha_component(alpha: WeightVector, F: HomogPolynomial, value: int):
    """Sum of the terms of F of weighted degree exactly `value`."""
    terms = {
        exp: c
        for exp, c in F.terms.items()
        if alpha.monomial_degree(exp) == value
    }
    return HomogPolynomial(F.field, F.num_vars, F.degree, terms)


@dataclass(frozen=True)
class SingularityProfile:
    """Expected singular dimension s and flag positions (v_0, ..., v_s)."""

    s: int
    v: tuple

    def __post_init__(self):
        if self.s >= 0 and len(self.v) != self.s + 1:
            raise ValueError("profile needs s+1 flag positions")
        if self.s < 0 and self.v:
            raise ValueError("empty profile must carry no positions")


def singularity_profile(alpha: WeightVector, F: HomogPolynomial) -> SingularityProfile:
    """Least s (and maximal flag depths) extracted from the weighted degree.

    s is the least value in {-1, ..., N-1} such that every split u+v = N-s-1
    has deg(F) >= alpha_u + (d-1) alpha_v; for 0 <= t <= s, v_t is the
    greatest v in {0, ..., N-t} with deg(F) < alpha_(N-v-t) + (d-1) alpha_v.
    """
    if F.is_zero():
        raise PolyError("profile undefined for the zero polynomial")
    if F.degree < 2:
        raise PolyError("profile needs degree at least 2")
    if alpha.num_vars != F.num_vars:
        raise PolyError("weight vector and polynomial dimensions differ")
    a = alpha.alphas
    N = alpha.N
    d = F.degree
    deg = alpha_degree(alpha, F)

    def dominated(s: int) -> bool:
        target = N - s - 1
        if target < 0:
            return True
        return all(
            deg >= a[u] + (d - 1) * a[target - u] for u in range(target + 1)
        )

    s = next(t for t in range(-1, N) if dominated(t))
    vs = []
    for t in range(0, s + 1):
        found = None
        for v in range(N - t, -1, -1):
            if deg < a[N - v - t] + (d - 1) * a[v]:
                found = v
                break
        if found is None:  # impossible when t <= s by minimality of s
            raise AssertionError("flag position must exist below s")
        vs.append(found)
    profile = SingularityProfile(s, tuple(vs))
    _assert_profile_invariants(profile, N)
    return profile


def _assert_profile_invariants(profile: SingularityProfile, N: int):
    s, v = profile.s, profile.v
    for t in range(0, s + 1):
        if 2 * v[t] < N + s - 2 * t:
            raise AssertionError(
                f"flag bound violated: v_{t}={v[t]} < (N+s-2t)/2 with N={N}, s={s}"
            )
    for t in range(1, s + 1):
        if v[t - 1] < v[t] + 1:
            raise AssertionError("flag depths must strictly decrease")


def singdeg_predicate(
    alpha: WeightVector, F: HomogPolynomial, u: int, v: int, s: int
) -> bool:
    """True iff deg(F) < alpha_u + (d-1) alpha_v, guaranteeing the singular
    section through the depth-v coordinate flat has dimension >= s."""
    if u < 0 or v < 0 or s < 0:
        raise ValueError("u, v, s must be nonnegative")
    N = alpha.N
    if u + v != N - s:
        raise ValueError(f"need u+v = N-s, got {u}+{v} != {N}-{s}")
    deg = alpha_degree(alpha, F)
    bound = alpha[u] + (F.degree - 1) * alpha[v]
    return deg < bound


def profile_lemma_report(alpha: WeightVector, F: HomogPolynomial) -> dict:
    """Exact checks of the three degree bounds attached to the profile.

    Reported values: nonneg_when_smooth_profile (degree >= 0 when s = -1,
    strict for d >= 3), ratio_bound (deg/d >= -(sum alpha_{v_t})/(N-s)), and
    positivity (alpha_{v_s} + (sum alpha_{v_t})/(N-s) > 0), the last two
    only when s >= 0.
    """
    profile = singularity_profile(alpha, F)
    deg = alpha_degree(alpha, F)
    d = F.degree
    N = alpha.N
    out = {"profile": profile, "degree": deg}
    if profile.s == -1:
        out["nonneg"] = deg >= 0
        out["strict_nonneg"] = (deg > 0) if d >= 3 else None
    else:
        total = sum(alpha[v] for v in profile.v)
        out["ratio_ok"] = Fraction(deg, d) >= Fraction(-total, N - profile.s)
        out["positivity_ok"] = (
            alpha[profile.v[profile.s]] + Fraction(total, N - profile.s) > 0
        )
    return out


def enumerate_weight_vectors(N: int, height: int):
    """All weight vectors on N+1 coordinates with entries in [-h, h],
    nondecreasing, sum zero, not all zero, in lexicographic order."""
    n = N + 1
    if height <= 0:
        return

    def rec(prefix, total):
        k = len(prefix)
        if k == n:
            if total == 0 and any(prefix):
                yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else -height
        rest = n - k - 1
        for a in range(lo, height + 1):
            new_total = total + a
            # remaining entries lie in [a, height]
            if new_total + rest * a > 0:
                break
            if new_total + rest * height < 0:
                continue
            yield from rec(prefix + [a], new_total)

    for tup in rec([], 0):
        yield WeightVector(tup)

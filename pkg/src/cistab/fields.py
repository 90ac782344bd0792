"""Exact coefficient fields: Q, prime fields F_p, and extensions F_{p^k}.

Elements are plain Python values owned by a Field object: Fraction over Q,
canonical ints in [0, p) over F_p, and ints in [0, p^k) over F_{p^k} whose
base-p digits (constant digit first) are the coefficients of the residue
polynomial modulo a fixed irreducible. Keeping elements unboxed keeps row
reduction and point enumeration cheap; all arithmetic goes through the
owning Field object, and containers check field identity before mixing
values. There is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

_MUL_TABLE_CAP = 1 << 16
_DECODE_CACHE_CAP = 1 << 20


class FieldError(ValueError):
    """Bad descriptor, reducible modulus, or cross-field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface; subclasses own the element representation."""

    descriptor: str
    characteristic: int
    order: int | None  # number of elements, None for Q

    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        acc, base = self.one, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def from_int(self, n: int):
        raise NotImplementedError

    def parse_coeff(self, text: str):
        raise NotImplementedError

    def format_coeff(self, a) -> str:
        return str(a)

    def elements(self):
        raise FieldError(f"{self.descriptor} is not a finite field")

    def random_element(self, rng):
        raise NotImplementedError

    def random_nonzero(self, rng):
        while True:
            a = self.random_element(rng)
            if a != self.zero:
                return a

    def __eq__(self, other):
        return isinstance(other, Field) and self.descriptor == other.descriptor

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return self.descriptor


class RationalField(Field):
    descriptor = "Q"
    characteristic = 0
    order = None
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def parse_coeff(self, text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"coefficient {text!r} is not in Q") from exc

    def random_element(self, rng):
        return Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p >= 1 << 31:
            raise FieldError(f"prime {p} exceeds the 2^31 support bound")
        self.p = p
        self.descriptor = f"F{p}"
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self.descriptor}")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def parse_coeff(self, text):
        try:
            n = int(text)
        except ValueError as exc:
            raise FieldError(
                f"coefficient {text!r} is not an integer mod {self.p}"
            ) from exc
        return n % self.p

    def elements(self):
        return range(self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)


# Dense little-endian coefficient tuples over F_p, used to build extensions.

def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) > dm:
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        if coef:
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - coef * mi) % p
        a.pop()
    return _poly_trim(tuple(a))


def _poly_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) > db:
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        q[shift] = coef
        if coef:
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - coef * bi) % p
        a.pop()
    return _poly_trim(tuple(q)), _poly_trim(tuple(a))


def _modulus_irreducible(modulus, p) -> bool:
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p != 1:
        return False
    for deg in range(1, k // 2 + 1):
        for enc in range(p**deg):
            cand = _decode_digits(enc, p, deg) + (1,)
            _, rem = _poly_divmod(modulus, cand, p)
            if not rem:
                return False
    return True


def _decode_digits(n, p, width):
    out = []
    for _ in range(width):
        n, d = divmod(n, p)
        out.append(d)
    return tuple(out)


@lru_cache(maxsize=None)
def find_irreducible(p: int, k: int):
    """Smallest (by digit encoding) monic irreducible of degree k over F_p."""
    for enc in range(p**k):
        cand = _decode_digits(enc, p, k) + (1,)
        if _modulus_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible of degree {k} over F{p}")  # unreachable


def _format_modulus(modulus) -> str:
    parts = []
    for e in range(len(modulus) - 1, -1, -1):
        c = modulus[e]
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            var = "x" if e == 1 else f"x^{e}"
            parts.append(var if c == 1 else f"{c}*{var}")
    return "+".join(parts) if parts else "0"


def _parse_modulus(text: str, p: int):
    coeffs: dict[int, int] = {}
    for term in text.replace("-", "+-").split("+"):
        term = term.strip()
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:].strip()
        coef, exp = 1, 0
        for factor in term.split("*"):
            factor = factor.strip()
            if factor.startswith("x"):
                exp = int(factor[2:]) if factor.startswith("x^") else (
                    int(factor[1:]) if factor[1:] else 1
                )
                if factor == "x":
                    exp = 1
            else:
                coef = int(factor)
        if neg:
            coef = -coef
        coeffs[exp] = (coeffs.get(exp, 0) + coef) % p
    deg = max(coeffs) if coeffs else 0
    return tuple(coeffs.get(e, 0) for e in range(deg + 1))


def _factorize(n: int):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class ExtensionField(Field):
    """F_{p^k} with elements encoded as ints in [0, p^k)."""

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k < 2:
            raise FieldError("extension degree must be at least 2")
        if modulus is None:
            modulus = find_irreducible(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {k}")
        if not _modulus_irreducible(modulus, p):
            raise FieldError(f"modulus {_format_modulus(modulus)} is reducible over F{p}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self.descriptor = f"F{self.q}:{_format_modulus(modulus)}"
        self.characteristic = p
        self.order = self.q
        self.zero = 0
        self.one = 1
        self._decode_cache = (
            [_decode_digits(n, p, k) for n in range(self.q)]
            if self.q <= _DECODE_CACHE_CAP
            else None
        )
        self._log = None
        self._exp = None
        if self.q <= _MUL_TABLE_CAP:
            self._build_log_tables()

    # -- encoding ---------------------------------------------------------

    def encode(self, digits) -> int:
        n = 0
        for d in reversed(digits):
            n = n * self.p + (d % self.p)
        return n

    def decode(self, n: int):
        if self._decode_cache is not None:
            return self._decode_cache[n]
        return _decode_digits(n, self.p, self.k)

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul(self.decode(a), self.decode(b), self.p)
        red = _poly_mod(prod, self.modulus, self.p)
        return self.encode(red + (0,) * (self.k - len(red)))

    def _build_log_tables(self):
        order_factors = _factorize(self.q - 1)
        g = None
        for cand in range(2, self.q):
            if all(
                self._pow_poly(cand, (self.q - 1) // f) != 1 for f in order_factors
            ):
                g = cand
                break
        exp = [1] * (self.q - 1)
        log = [0] * self.q
        acc = 1
        for i in range(self.q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_poly(acc, g)
        self._exp, self._log = exp, log

    def _pow_poly(self, a: int, e: int) -> int:
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self._mul_poly(acc, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return acc

    # -- field ops --------------------------------------------------------

    def add(self, a, b):
        da, db = self.decode(a), self.decode(b)
        return self.encode(tuple((x + y) % self.p for x, y in zip(da, db)))

    def sub(self, a, b):
        da, db = self.decode(a), self.decode(b)
        return self.encode(tuple((x - y) % self.p for x, y in zip(da, db)))

    def neg(self, a):
        return self.encode(tuple((-x) % self.p for x in self.decode(a)))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_poly(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self.descriptor}")
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self._pow_poly(a, self.q - 2)

    def from_int(self, n):
        return n % self.p

    def parse_coeff(self, text):
        try:
            n = int(text)
        except ValueError as exc:
            raise FieldError(
                f"coefficient {text!r} is not an integer mod {self.p}"
            ) from exc
        return n % self.p

    def format_coeff(self, a):
        return str(a)

    def elements(self):
        return range(self.q)

    def random_element(self, rng):
        return rng.randrange(self.q)

    def eval_modulus_of(self, base: "ExtensionField", x: int) -> int:
        """Evaluate base.modulus at x inside this field (digits lifted)."""
        acc = 0
        for c in reversed(base.modulus):
            acc = self.add(self.mul(acc, x), c % self.p)
        return acc


@lru_cache(maxsize=None)
def rationals() -> RationalField:
    return RationalField()


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


@lru_cache(maxsize=None)
def extension_field(p: int, k: int, modulus=None) -> ExtensionField:
    return ExtensionField(p, k, modulus)


def field_from_descriptor(text: str) -> Field:
    """Parse `Q`, `F5`, or `F25:x^2+x+2` into a Field object."""
    text = text.strip()
    if text == "Q":
        return rationals()
    if not text.startswith("F"):
        raise FieldError(f"unknown field descriptor {text!r}")
    body = text[1:]
    modulus_text = None
    if ":" in body:
        body, modulus_text = body.split(":", 1)
    try:
        q = int(body)
    except ValueError as exc:
        raise FieldError(f"unknown field descriptor {text!r}") from exc
    if q < 2:
        raise FieldError(f"field order {q} is not a prime power")
    factors = _factorize(q)
    if len(factors) != 1:
        raise FieldError(f"field order {q} is not a prime power")
    p = factors[0]
    k = 0
    m = q
    while m > 1:
        m //= p
        k += 1
    if p**k != q:
        raise FieldError(f"field order {q} is not a prime power")
    if k == 1:
        if modulus_text is not None:
            raise FieldError("prime fields take no modulus")
        return prime_field(p)
    modulus = _parse_modulus(modulus_text, p) if modulus_text else None
    return extension_field(p, k, modulus)


@lru_cache(maxsize=None)
def embedding(src: Field, dst: Field):
    """Return a map src -> dst of fields, or raise FieldError.

    Prime-to-extension embeddings are the identity on encodings; base
    extensions embed by sending the generator to a root of the base modulus
    found by scanning dst (cached, desk scale only).
    """
    if src == dst:
        return lambda a: a
    if isinstance(src, PrimeField) and isinstance(dst, ExtensionField):
        if src.p != dst.p:
            raise FieldError(f"no embedding {src.descriptor} -> {dst.descriptor}")
        return lambda a: a
    if isinstance(src, ExtensionField) and isinstance(dst, ExtensionField):
        if src.p != dst.p or dst.k % src.k != 0:
            raise FieldError(f"no embedding {src.descriptor} -> {dst.descriptor}")
        root = None
        for x in range(dst.q):
            if dst.eval_modulus_of(src, x) == 0:
                root = x
                break
        if root is None:
            raise FieldError(
                f"no root of {src.descriptor} modulus in {dst.descriptor}"
            )

        def embed(a, _root=root, _src=src, _dst=dst):
            acc = 0
            for d in reversed(_src.decode(a)):
                acc = _dst.add(_dst.mul(acc, _root), d)
            return acc

        return embed
    raise FieldError(f"no embedding {src.descriptor} -> {dst.descriptor}")

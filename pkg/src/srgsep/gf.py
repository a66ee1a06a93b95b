"""Finite fields GF(p^k) in polynomial basis.

Elements are encoded as integers ``0 <= x < q``: the coefficient vector
``(c_0, ..., c_{k-1})`` of ``c_0 + c_1 X + ... + c_{k-1} X^{k-1}`` maps to
``sum(c_i * p**i)``.  The encoding is the vertex order used by every Cayley
graph generator, so 0 is the zero element and 1 the identity.

The modulus is the lexicographically smallest monic irreducible polynomial of
degree k, with coefficient vectors compared from the constant term upwards.
For ``q <= 2**16`` multiplication runs through log/antilog tables; larger
fields fall back to polynomial arithmetic.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

import numpy as np

from ._arith import is_prime, prime_divisors
from .errors import (
    DegreeZero,
    DoesNotDivide,
    FieldMismatch,
    NotDivisor,
    NotPrime,
    TooLarge,
    ZeroInverse,
)

MAX_ORDER = 2**24
TABLE_LIMIT = 2**16


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists low degree first
# ---------------------------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(_trim(a)) - 1 >= dm:
        shift = len(a) - 1 - dm
        c = a[-1] * inv_lead % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
    return a


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_mulmod(a, b, m, p):
    return poly_mod(poly_mul(a, b, p), m, p)


def poly_powmod(a, e, m, p):
    result = [1]
    base = poly_mod(a, m, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, m, p)
        base = poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_mod(a, b, p)
    return a


def is_irreducible(f, p) -> bool:
    """Rabin's irreducibility test for a monic polynomial f over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if poly_sub(poly_powmod(x, p**k, f, p), x, p):
        return False
    for r in prime_divisors(k):
        h = poly_sub(poly_powmod(x, p ** (k // r), f, p), x, p)
        g = poly_gcd(f, h, p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k (low coefficients first)."""
    if k == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=k):
        if low[0] == 0:
            continue  # divisible by X
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class GF:
    """The field GF(p^k); build instances with :func:`make_field`."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._pows = [p**i for i in range(k)]
        # digit table: element -> coefficient vector
        q = self.q
        digits = np.zeros((q, k), dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        for i in range(k):
            digits[:, i] = (idx // self._pows[i]) % p
        self.digits = digits
        self._weights = np.array(self._pows, dtype=np.int64)
        if q <= TABLE_LIMIT:
            self._build_tables()
        else:
            self.exp = self.log = None

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    # -- encoding -----------------------------------------------------------
    def coeffs(self, x: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.digits[x])

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs) + [0] * (self.k - len(coeffs))
        if len(coeffs) > self.k:
            coeffs = poly_mod(coeffs, list(self.modulus), self.p) + [0] * self.k
        return sum((c % self.p) * w for c, w in zip(coeffs[: self.k], self._pows))

    def element(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            self._check(x)
            return x
        if isinstance(x, (tuple, list)):
            x = self.from_coeffs(x)
        return FieldElement(self, int(x))

    def elements(self) -> range:
        return range(self.q)

    def lex_key(self, x: int) -> tuple[int, ...]:
        return self.coeffs(x)

    # -- scalar arithmetic on encoded ints -------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        d = (self.digits[a] + self.digits[b]) % self.p
        return int(d @ self._weights)

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        if self.k == 1:
            return self.p - a
        return int(((-self.digits[a]) % self.p) @ self._weights)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.log is not None:
            return int(self.exp[self.log[a] + self.log[b]])
        if self.k == 1:
            return a * b % self.p
        return self.from_coeffs(
            poly_mulmod(list(self.coeffs(a)), list(self.coeffs(b)), list(self.modulus), self.p)
        )

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroInverse("0 has no inverse")
            return 1 if e == 0 else 0
        if self.log is not None:
            return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])
        e %= self.q - 1
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, x: int, i: int = 1) -> int:
        """x -> x^(p^i)."""
        i %= self.k
        return self.pow(x, self.p**i)

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative order")
        n = self.q - 1
        for r in prime_divisors(n):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def trace(self, x: int) -> int:
        """Absolute trace to GF(p), as an int in [0, p)."""
        t, y = 0, x
        for _ in range(self.k):
            t = self.add(t, y)
            y = self.frobenius(y)
        return t

    # -- vectorised arithmetic (numpy int arrays of encoded elements) -----
    def add_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        return ((self.digits[a] + self.digits[b]) % self.p) @ self._weights

    def neg_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        return ((-self.digits[a]) % self.p) @ self._weights

    def sub_arr(self, a, b):
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        if self.log is None:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_arr(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if self.log is None:
            return np.vectorize(lambda x: self.pow(x, e), otypes=[np.int64])(a)
        out = self.exp[(self.log[a] * e) % (self.q - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    # -- structure -------------------------------------------------------
    @cached_property
    def primitive(self) -> int:
        """Smallest element (lexicographic coefficient order) of order q-1."""
        for x in sorted(range(1, self.q), key=self.lex_key):
            if self._order_no_table(x) == self.q - 1:
                return x
        raise AssertionError("multiplicative group is cyclic")

    def _order_no_table(self, a):
        n = self.q - 1
        for r in prime_divisors(n):
            while n % r == 0 and self._slow_pow(a, n // r) == 1:
                n //= r
        return n

    def _slow_pow(self, a, e):
        if self.k == 1:
            return pow(a, e, self.p)
        res = poly_powmod(list(self.coeffs(a)), e, list(self.modulus), self.p)
        return self.from_coeffs(res)

    def _build_tables(self):
        q = self.q
        if q == 2:
            self.exp = np.array([1, 1, 1], dtype=np.int64)
            self.log = np.array([0, 0], dtype=np.int64)
            return
        g = self.primitive
        # multiplication by g is GF(p)-linear: image of each basis monomial
        basis_img = np.array(
            [self.coeffs(self._slow_mul(g, self._pows[i])) for i in range(self.k)],
            dtype=np.int64,
        )
        exp = np.empty(2 * (q - 1), dtype=np.int64)
        cur = np.zeros(self.k, dtype=np.int64)
        cur[0] = 1
        w = self._weights
        for i in range(q - 1):
            exp[i] = int(cur @ w)
            cur = (cur @ basis_img) % self.p
        exp[q - 1 :] = exp[: q - 1]
        log = np.zeros(q, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        if len(set(exp[: q - 1].tolist())) != q - 1:
            raise AssertionError("primitive element has wrong order")
        self.exp, self.log = exp, log

    def _slow_mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        return self.from_coeffs(
            poly_mulmod(list(self.coeffs(a)), list(self.coeffs(b)), list(self.modulus), self.p)
        )

    def _check(self, x: FieldElement):
        if x.field is not self:
            raise FieldMismatch(f"{x!r} does not belong to {self!r}")

    def is_square(self, x: int) -> bool:
        if x == 0:
            return True
        if self.p == 2:
            return True
        return self.pow(x, (self.q - 1) // 2) == 1


class FieldElement:
    """Immutable wrapper around an encoded element with operator overloads."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        if not 0 <= value < field.q:
            raise ValueError(f"{value} is not an element of {field!r}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_coeffs([other])
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, o))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_coeffs([other])
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.value}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = "" if (c == 1 and i) else str(c)
                terms.append(coef + mono)
        return "+".join(reversed(terms)) or "0"


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> GF:
    """Return GF(p^k); repeated calls return the same (immutable) instance."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise DegreeZero("extension degree must be >= 1")
    if p**k > MAX_ORDER:
        raise TooLarge(f"GF({p}^{k}) exceeds the 2^24 cap")
    return GF(p, k, smallest_irreducible(p, k))


def field_of_order(q: int) -> GF:
    from ._arith import prime_power

    p, k = prime_power(q)
    return make_field(p, k)


def primitive_element(f: GF) -> FieldElement:
    return FieldElement(f, f.primitive)


def power_classes(f: GF, e: int) -> list[list[int]]:
    """Cosets g^i * S (i = 0..e-1) of the subgroup S of e-th powers."""
    if e < 1 or (f.q - 1) % e:
        raise DoesNotDivide(f"{e} does not divide {f.q - 1}")
    g = f.primitive
    n = (f.q - 1) // e
    classes = []
    for i in range(e):
        cls = sorted(f.pow(g, i + e * j) for j in range(n))
        classes.append(cls)
    return classes


def subfield_elements(f: GF, d: int) -> list[int]:
    """The subfield GF(p^d), as the fixed points of x -> x^(p^d)."""
    if d < 1 or f.k % d:
        raise NotDivisor(f"{d} does not divide {f.k}")
    if f.log is not None:
        xs = np.arange(f.q)
        fixed = f.pow_arr(xs, f.p**d) == xs
        return [int(x) for x in np.nonzero(fixed)[0]]
    return [x for x in range(f.q) if f.pow(x, f.p**d) == x]


def frobenius(f: GF, x, i: int = 1):
    if isinstance(x, FieldElement):
        f._check(x)
        return FieldElement(f, f.frobenius(x.value, i))
    return f.frobenius(x, i)

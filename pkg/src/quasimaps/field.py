"""
Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as its coordinate vector in the power basis
1, w, ..., w^(phi(N)-1) where w = exp(2 pi i / N).  Coordinates are
``gmpy2.mpq`` rationals, so every operation is exact and the stored form
is always fully reduced modulo the N-th cyclotomic polynomial.

Two layers are provided.  ``CyclotomicField`` works on bare coordinate
tuples and is what the series code uses in its inner loops.
``CycloRational`` wraps a tuple together with its field and gives the
usual operator interface.

>>> i = root_of_unity(4, 1)
>>> i * i == -1
True
>>> (1 + i).inverse()
CycloRational('1/2*w^0+-1/2*w^1', order=4)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from gmpy2 import mpq

__all__ = [
    "CyclotomicField",
    "CycloRational",
    "root_of_unity",
    "embed_rational",
    "field_op",
    "common_order",
    "cyclotomic_polynomial",
    "parse_literal",
]

_ZERO = mpq(0)
_ONE = mpq(1)


def _poly_divexact(num, den):
    # exact division of integer polynomials, coefficients low to high
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = q
        if q:
            for j, d in enumerate(den):
                num[k + j] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, cyclotomic_polynomial(d))
    return tuple(p)


def _as_mpq(x):
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class CyclotomicField:
    """Coordinate arithmetic in Q(zeta_N); one cached instance per N."""

    _instances: dict = {}

    def __new__(cls, order):
        order = int(order)
        inst = cls._instances.get(order)
        if inst is not None:
            return inst
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        inst = super().__new__(cls)
        inst._setup(order)
        cls._instances[order] = inst
        return inst

    def _setup(self, order):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        n = self.degree = len(self.modulus) - 1
        self.zero = (_ZERO,) * n
        self.one = (_ONE,) + (_ZERO,) * (n - 1)
        # w^k in the power basis, k = 0 .. order-1 (integer vectors)
        powers = []
        v = [1] + [0] * (n - 1)
        for _ in range(max(order, 2 * n - 1)):
            powers.append(tuple(v))
            top = v[-1]
            v = [0] + v[:-1]
            if top:
                for j in range(n):
                    v[j] -= top * self.modulus[j]
        self._powers = powers[:order]
        # reduction rows for products: exponents 0 .. 2n-2
        self._red = [tuple((m, c) for m, c in enumerate(powers[k]) if c) for k in range(2 * n - 1)]
        self.mul = self._pick_mul()

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def __reduce__(self):
        return (CyclotomicField, (self.order,))

    def _pick_mul(self):
        n = self.degree
        if n == 1:
            return lambda x, y: (x[0] * y[0],)
        if self.modulus == (1, 0, 1):  # w^2 = -1
            def mul(x, y):
                a, b = x
                c, d = y
                return (a * c - b * d, a * d + b * c)
            return mul
        if self.modulus == (1, 1, 1):  # w^2 = -1 - w
            def mul(x, y):
                a, b = x
                c, d = y
                bd = b * d
                return (a * c - bd, a * d + b * c - bd)
            return mul
        if self.modulus == (1, -1, 1):  # w^2 = w - 1
            def mul(x, y):
                a, b = x
                c, d = y
                bd = b * d
                return (a * c - bd, a * d + b * c + bd)
            return mul
        red = self._red

        def mul(x, y):
            prod = [_ZERO] * (2 * n - 1)
            for i, xi in enumerate(x):
                if xi:
                    for j, yj in enumerate(y):
                        if yj:
                            prod[i + j] += xi * yj
            out = list(prod[:n])
            for k in range(n, 2 * n - 1):
                pk = prod[k]
                if pk:
                    for m, c in red[k]:
                        out[m] += c * pk
            return tuple(out)
        return mul

    # coordinate helpers -------------------------------------------------

    @staticmethod
    def add(x, y):
        return tuple(a + b for a, b in zip(x, y))

    @staticmethod
    def sub(x, y):
        return tuple(a - b for a, b in zip(x, y))

    @staticmethod
    def neg(x):
        return tuple(-a for a in x)

    @staticmethod
    def scale(x, r):
        return tuple(a * r for a in x)

    @staticmethod
    def is_zero(x):
        return not any(x)

    def rational(self, r):
        return (_as_mpq(r),) + (_ZERO,) * (self.degree - 1)

    def root(self, k):
        return tuple(mpq(c) for c in self._powers[k % self.order])

    def inv(self, x):
        """Inverse via the multiplication matrix; ZeroDivisionError on 0."""
        n = self.degree
        if not any(x):
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.order)
        if n == 1:
            return (1 / x[0],)
        # columns: x * w^j
        cols = []
        col = list(x)
        for _ in range(n):
            cols.append(col)
            col = list(self.mul(tuple(col), self.root(1)))
        # solve sum_j y_j cols[j] = e_0
        m = [[cols[j][i] for j in range(n)] + [_ONE if i == 0 else _ZERO] for i in range(n)]
        for c in range(n):
            p = next(r for r in range(c, n) if m[r][c])
            m[c], m[p] = m[p], m[c]
            piv = m[c][c]
            m[c] = [v / piv for v in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return tuple(m[i][n] for i in range(n))

    def embed_into(self, x, target):
        """Image of x under Q(zeta_N) -> Q(zeta_M), N | M."""
        tgt = target if isinstance(target, CyclotomicField) else CyclotomicField(target)
        if tgt.order % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {tgt.order}")
        if tgt is self:
            return x
        step = tgt.order // self.order
        out = [_ZERO] * tgt.degree
        for k, c in enumerate(x):
            if c:
                for m, v in enumerate(tgt._powers[(k * step) % tgt.order]):
                    if v:
                        out[m] += c * v
        return tuple(out)

    def conjugate(self, x):
        out = [_ZERO] * self.degree
        for k, c in enumerate(x):
            if c:
                for m, v in enumerate(self._powers[(-k) % self.order]):
                    if v:
                        out[m] += c * v
        return tuple(out)

    # literal format -----------------------------------------------------

    def to_literal(self, x):
        terms = []
        for k, c in enumerate(x):
            if c:
                terms.append(f"{c.numerator}/{c.denominator}*w^{k}")
        return "+".join(terms) if terms else "0/1*w^0"

    def from_literal(self, text):
        out = [_ZERO] * self.degree
        text = text.strip()
        if not text:
            raise ValueError("empty literal")
        for term in _split_terms(text):
            if "*w^" in term:
                coef, _, exp = term.partition("*w^")
                k = int(exp)
            elif term.endswith("*w"):
                coef, k = term[:-2], 1
            else:
                coef, k = term, 0
            c = mpq(coef)
            if k < 0:
                raise ValueError(f"negative exponent in literal term {term!r}")
            if k < self.degree:
                out[k] += c
            else:
                for m, v in enumerate(self._powers[k % self.order]):
                    if v:
                        out[m] += c * v
        return tuple(out)


def _split_terms(text):
    # "+" separates terms; a "+" directly followed by "-" is a sign
    parts = []
    cur = ""
    for ch in text:
        if ch == "+" and cur and not cur.endswith("^"):
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    if cur:
        parts.append(cur)
    return [p.strip() for p in parts]


def common_order(*orders):
    """Least common multiple of the given cyclotomic orders."""
    out = 1
    for n in orders:
        out = out * n // gcd(out, n)
    return out


class CycloRational:
    """An element of Q(zeta_N) with operator arithmetic.

    Mixed-order arithmetic is allowed when one order divides the other;
    the result lives in the larger field.  Anything else must be embedded
    explicitly with ``embed``.
    """

    __slots__ = ("field", "c")

    def __init__(self, order, coeffs=None):
        field = order if isinstance(order, CyclotomicField) else CyclotomicField(order)
        self.field = field
        if coeffs is None:
            self.c = field.zero
            return
        if isinstance(coeffs, str):
            self.c = field.from_literal(coeffs)
            return
        coeffs = [_as_mpq(v) for v in coeffs]
        if len(coeffs) > field.degree:
            # reduce a longer power-basis vector
            acc = [_ZERO] * field.degree
            for k, v in enumerate(coeffs):
                if v:
                    for m, p in enumerate(field._powers[k % field.order]):
                        if p:
                            acc[m] += v * p
            coeffs = acc
        coeffs += [_ZERO] * (field.degree - len(coeffs))
        self.c = tuple(coeffs)

    @classmethod
    def _raw(cls, field, c):
        obj = object.__new__(cls)
        obj.field = field
        obj.c = c
        return obj

    @property
    def order(self):
        return self.field.order

    @property
    def coeffs(self):
        return self.c

    # conversion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloRational):
            if other.field is self.field:
                return self.field, self.c, other.c
            n, m = self.field.order, other.field.order
            if m % n == 0:
                return other.field, self.field.embed_into(self.c, other.field), other.c
            if n % m == 0:
                return self.field, self.c, other.field.embed_into(other.c, self.field)
            raise ValueError(f"incompatible cyclotomic orders {n} and {m}; embed explicitly")
        if isinstance(other, (int, Fraction)) or type(other) is type(_ONE):
            return self.field, self.c, self.field.rational(other)
        return None

    def embed(self, order):
        f = CyclotomicField(order)
        return CycloRational._raw(f, self.field.embed_into(self.c, f))

    def is_rational(self):
        return not any(self.c[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        v = self.c[0]
        return Fraction(int(v.numerator), int(v.denominator))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        f, a, b = t
        return CycloRational._raw(f, f.add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        f, a, b = t
        return CycloRational._raw(f, f.sub(a, b))

    def __rsub__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        f, a, b = t
        return CycloRational._raw(f, f.sub(b, a))

    def __mul__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        f, a, b = t
        return CycloRational._raw(f, f.mul(a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        f, a, b = t
        return CycloRational._raw(f, f.mul(a, f.inv(b)))

    def __rtruediv__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        f, a, b = t
        return CycloRational._raw(f, f.mul(b, f.inv(a)))

    def __neg__(self):
        return CycloRational._raw(self.field, self.field.neg(self.c))

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = self.field.one
        b = base.c
        mul = self.field.mul
        while k:
            if k & 1:
                out = mul(out, b)
            k >>= 1
            if k:
                b = mul(b, b)
        return CycloRational._raw(self.field, out)

    def inverse(self):
        return CycloRational._raw(self.field, self.field.inv(self.c))

    def conjugate(self):
        return CycloRational._raw(self.field, self.field.conjugate(self.c))

    def __bool__(self):
        return any(self.c)

    def is_zero(self):
        return not any(self.c)

    def __eq__(self, other):
        t = self._coerce(other)
        if t is None:
            return NotImplemented
        _, a, b = t
        return a == b

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.field.order, self.c))

    # text ---------------------------------------------------------------

    def to_literal(self, header=False):
        body = self.field.to_literal(self.c)
        return f"zeta_order={self.order} {body}" if header else body

    def __str__(self):
        return self.to_literal()

    def __repr__(self):
        return f"CycloRational('{self.to_literal()}', order={self.order})"


def parse_literal(text, order=None):
    """Parse a literal, optionally prefixed by a ``zeta_order=N`` token."""
    text = text.strip()
    if text.startswith("zeta_order="):
        head, _, body = text.partition(" ")
        n = int(head.split("=", 1)[1])
        if order is not None and order != n:
            raise ValueError(f"literal declares order {n}, expected {order}")
        order = n
        text = body
    if order is None:
        raise ValueError("literal has no zeta_order header and no order was given")
    return CycloRational(order, text)


def root_of_unity(order, k=1):
    """w^k with w = exp(2 pi i / order)."""
    f = CyclotomicField(order)
    return CycloRational._raw(f, f.root(k))


def embed_rational(r, order=1):
    f = CyclotomicField(order)
    return CycloRational._raw(f, f.rational(r))


def field_op(a, b, op):
    """Apply one of '+', '-', '*', '/' to two field elements."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")

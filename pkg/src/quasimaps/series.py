"""
Truncated power series in q1, q2 over a cyclotomic field.

A ``BiSeries`` with truncation (N1, N2) stores every coefficient of
q1^d1 q2^d2 with d1 <= N1 and d2 <= N2 (both bounds inclusive).  The
result of a binary operation carries the componentwise minimum of the
operands' truncations, so a computed coefficient is never more precise
than its inputs justify.

Coefficients live in a flat, q1-major list.  Each slot holds a
coordinate tuple of the field or ``None`` for zero; the ``None`` slots
make sparse operands (univariate slices, monomials) cheap to multiply.

Composite operations (inverse, n-th root, exp, log) use coefficient
recurrences driven by the total Euler operator q1 d/dq1 + q2 d/dq2.
They are exact and cost about one multiplication each.

``UniSeries`` is a BiSeries with truncation (N, 0) that carries a
variable label.  It is treated as exactly constant in q2 when combined
with a genuine BiSeries, so ``L(q1) * F(q1, q2)`` keeps F's q2 precision.
"""

from __future__ import annotations

import json
from fractions import Fraction

from gmpy2 import mpq

from .field import CyclotomicField, CycloRational, _as_mpq, common_order

__all__ = [
    "BiSeries",
    "UniSeries",
    "TruncationError",
    "series_from_json",
    "coefficient_slice",
    "substitute",
    "reversion",
]


class TruncationError(ValueError):
    """An operation would need coefficients beyond the stored truncation."""


def _clean(c):
    return [x if (x is not None and any(x)) else None for x in c]


def _tadd(x, y):
    return tuple([a + b for a, b in zip(x, y)])


def _tsub(x, y):
    return tuple([a - b for a, b in zip(x, y)])


def _tscale(x, r):
    return tuple([a * r for a in x])


def _scalar_tuple(field, value):
    """Coordinate tuple of a scalar in ``field`` (embedding if needed)."""
    if isinstance(value, CycloRational):
        if value.field is field:
            return value.c
        return value.field.embed_into(value.c, field)
    return field.rational(value)


def _is_scalar(x):
    return isinstance(x, (int, Fraction, CycloRational)) or type(x) is type(mpq(0))


class BiSeries:
    """Truncated bivariate power series with cyclotomic coefficients."""

    __slots__ = ("field", "trunc", "c")
    var = None

    def __init__(self, trunc, order=1, coeffs=None):
        self.field = order if isinstance(order, CyclotomicField) else CyclotomicField(order)
        n1, n2 = (int(t) for t in trunc)
        if n1 < 0 or n2 < 0:
            raise ValueError("truncation orders must be non-negative")
        self.trunc = (n1, n2)
        self.c = [None] * ((n1 + 1) * (n2 + 1))
        if coeffs:
            for (d1, d2), v in dict(coeffs).items():
                if d1 <= n1 and d2 <= n2:
                    self.c[d1 * (n2 + 1) + d2] = _scalar_tuple(self.field, v)
            self.c = _clean(self.c)

    def _new(self, field, trunc, c):
        obj = object.__new__(BiSeries)
        obj.field = field
        obj.trunc = trunc
        obj.c = c
        return obj

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, trunc, order=1):
        return BiSeries(trunc, order)

    @classmethod
    def constant(cls, value, trunc, order=1):
        s = BiSeries(trunc, order)
        s.c[0] = _scalar_tuple(s.field, value) if value else None
        return s

    @classmethod
    def one(cls, trunc, order=1):
        return cls.constant(1, trunc, order)

    @classmethod
    def monomial(cls, d1, d2, trunc, order=1, coeff=1):
        return BiSeries(trunc, order, {(d1, d2): coeff})

    @classmethod
    def q1(cls, trunc, order=1):
        return cls.monomial(1, 0, trunc, order)

    @classmethod
    def q2(cls, trunc, order=1):
        return cls.monomial(0, 1, trunc, order)

    @classmethod
    def from_function(cls, f, trunc, order=1):
        """Coefficient of q1^d1 q2^d2 is ``f(d1, d2)``."""
        return BiSeries(trunc, order, {(a, b): f(a, b) for a in range(trunc[0] + 1)
                                       for b in range(trunc[1] + 1)})

    # basic access -------------------------------------------------------

    @property
    def order(self):
        return self.field.order

    def _idx(self, d1, d2):
        n1, n2 = self.trunc
        if not (0 <= d1 <= n1 and 0 <= d2 <= n2):
            raise TruncationError(f"coefficient ({d1},{d2}) outside truncation {self.trunc}")
        return d1 * (n2 + 1) + d2

    def __getitem__(self, key):
        d1, d2 = key
        v = self.c[self._idx(d1, d2)]
        return CycloRational._raw(self.field, v if v is not None else self.field.zero)

    def items(self):
        """Nonzero coefficients as ((d1, d2), CycloRational), lexicographic."""
        w = self.trunc[1] + 1
        for k, v in enumerate(self.c):
            if v is not None:
                yield (k // w, k % w), CycloRational._raw(self.field, v)

    def to_dict(self):
        return dict(self.items())

    def constant_term(self):
        return CycloRational._raw(self.field, self.c[0] if self.c[0] is not None else self.field.zero)

    def is_zero(self):
        return all(v is None for v in self.c)

    def first_nonzero(self):
        """Exponent of the first nonzero coefficient (lexicographic) or None."""
        for d, _ in self.items():
            return d
        return None

    def is_rational(self):
        return all(v is None or not any(v[1:]) for v in self.c)

    def __eq__(self, other):
        if isinstance(other, BiSeries):
            if other.trunc != self.trunc and not (isinstance(other, UniSeries) or isinstance(self, UniSeries)):
                return False
            return (self - other).is_zero()
        if _is_scalar(other):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    # truncation and embedding ------------------------------------------

    def truncate(self, trunc):
        """Restrict to a smaller truncation."""
        m1, m2 = trunc
        n1, n2 = self.trunc
        if m1 > n1 or m2 > n2:
            raise TruncationError(f"cannot extend truncation {self.trunc} to {tuple(trunc)}")
        if (m1, m2) == self.trunc:
            return self
        c = []
        w = n2 + 1
        for d1 in range(m1 + 1):
            c.extend(self.c[d1 * w: d1 * w + m2 + 1])
        return self._new(self.field, (m1, m2), c)

    def embed(self, order):
        f = CyclotomicField(order)
        if f is self.field:
            return self
        emb = self.field.embed_into
        c = [None if v is None else emb(v, f) for v in self.c]
        return self._new(f, self.trunc, c)

    def _align(self, other):
        """Common field, truncation and coefficient lists for a binary op."""
        a, b = self, other
        if isinstance(a, UniSeries) and not isinstance(b, UniSeries):
            a = a.lift(b.trunc[1])
        elif isinstance(b, UniSeries) and not isinstance(a, UniSeries):
            b = b.lift(a.trunc[1])
        if a.field is not b.field:
            n = common_order(a.order, b.order)
            if n not in (a.order, b.order):
                raise ValueError(f"incompatible cyclotomic orders {a.order} and {b.order}")
            a, b = a.embed(n), b.embed(n)
        t = (min(a.trunc[0], b.trunc[0]), min(a.trunc[1], b.trunc[1]))
        a, b = a.truncate(t), b.truncate(t)
        proto = self if (isinstance(self, UniSeries) and isinstance(other, UniSeries)) else a
        return proto, a.field, t, a.c, b.c

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, BiSeries):
            proto, f, t, a, b = self._align(other)
            c = [x if y is None else (y if x is None else _tadd(x, y)) for x, y in zip(a, b)]
            return proto._new(f, t, _clean(c))
        if _is_scalar(other):
            if isinstance(other, CycloRational) and other.field is not self.field:
                return self + self._const_like(other)
            s = _scalar_tuple(self.field, other)
            c = list(self.c)
            c[0] = s if c[0] is None else _tadd(c[0], s)
            if not any(c[0]):
                c[0] = None
            return self._new(self.field, self.trunc, c)
        return NotImplemented

    __radd__ = __add__

    def _const_like(self, value):
        if isinstance(value, CycloRational) and value.field is not self.field:
            n = common_order(value.order, self.order)
            base = self.embed(n)
            v = value.embed(n)
        else:
            base, v = self, value
        out = base._new(base.field, base.trunc, [None] * len(base.c))
        out.c[0] = _scalar_tuple(base.field, v) if v else None
        return out

    def __neg__(self):
        return self._new(self.field, self.trunc, [None if x is None else tuple([-a for a in x]) for x in self.c])

    def __sub__(self, other):
        if isinstance(other, BiSeries) or _is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value):
        """Multiply by a scalar."""
        if isinstance(value, CycloRational):
            if value.field is not self.field:
                n = common_order(value.order, self.order)
                if n != self.order:
                    return self.embed(n).scale(value)
                v = value.field.embed_into(value.c, self.field)
            else:
                v = value.c
            if not any(v[1:]):
                return self.scale(v[0])
            mul = self.field.mul
            c = [None if x is None else mul(x, v) for x in self.c]
            return self._new(self.field, self.trunc, _clean(c))
        r = _as_mpq(value)
        if not r:
            return self._new(self.field, self.trunc, [None] * len(self.c))
        return self._new(self.field, self.trunc, [None if x is None else _tscale(x, r) for x in self.c])

    def __mul__(self, other):
        if isinstance(other, BiSeries):
            proto, f, t, a, b = self._align(other)
            return proto._new(f, t, _mul_flat(f, t, a, b))
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, BiSeries):
            return self * other.invert()
        if _is_scalar(other):
            if isinstance(other, CycloRational):
                return self.scale(other.inverse())
            return self.scale(1 / _as_mpq(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return self.invert().scale(other)
        return NotImplemented

    def __pow__(self, k):
        if isinstance(k, Fraction):
            return self.power(k)
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        out = self.one_like()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def one_like(self):
        out = self._new(self.field, self.trunc, [None] * len(self.c))
        out.c[0] = self.field.one
        return out

    def zero_like(self):
        return self._new(self.field, self.trunc, [None] * len(self.c))

    # derivatives --------------------------------------------------------

    def euler(self, axis):
        """q_a d/dq_a for axis a in {1, 2}."""
        w = self.trunc[1] + 1
        c = []
        for k, x in enumerate(self.c):
            if x is None:
                c.append(None)
                continue
            d = k // w if axis == 1 else k % w
            c.append(_tscale(x, mpq(d)) if d else None)
        return self._new(self.field, self.trunc, c)

    @property
    def D1(self):
        return self.euler(1)

    @property
    def D2(self):
        return self.euler(2)

    # recurrences --------------------------------------------------------

    def _nonzero_tail(self):
        w = self.trunc[1] + 1
        return [(k, k // w, k % w, x) for k, x in enumerate(self.c) if x is not None and k]

    def _walk(self):
        """Yield (flat index, d1, d2, total degree) in flat order."""
        n1, n2 = self.trunc
        k = 0
        for d1 in range(n1 + 1):
            for d2 in range(n2 + 1):
                yield k, d1, d2, d1 + d2
                k += 1

    def invert(self):
        """Multiplicative inverse; the constant term must be nonzero."""
        f = self.field
        a0 = self.c[0]
        if a0 is None:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = f.inv(a0)
        mul = f.mul
        tail = self._nonzero_tail()
        n2 = self.trunc[1]
        w = n2 + 1
        out = [None] * len(self.c)
        out[0] = inv0
        for k, d1, d2, _ in self._walk():
            if not k:
                continue
            acc = None
            for j, e1, e2, aj in tail:
                if e1 > d1:
                    break
                if e2 <= d2:
                    b = out[k - j]
                    if b is not None:
                        p = mul(aj, b)
                        acc = p if acc is None else _tadd(acc, p)
            if acc is not None and any(acc):
                out[k] = tuple([-x for x in mul(acc, inv0)])
        return self._new(f, self.trunc, out)

    def power(self, alpha, constant=None):
        """self**alpha for rational alpha, constant term of the result given.

        Without ``constant`` the constant term of self must be 1 and the
        result starts with 1.
        """
        alpha = Fraction(alpha)
        f = self.field
        a0 = self.c[0]
        if a0 is None:
            raise ValueError("power of a series with zero constant term")
        if constant is None:
            if a0 != f.one:
                raise ValueError("constant term is not 1; give the branch constant")
            y0 = f.one
        else:
            y0 = _scalar_tuple(f, constant)
            c = CycloRational._raw(f, y0)
            if alpha.denominator > 0:
                lhs = c ** alpha.denominator
                rhs = CycloRational._raw(f, a0) ** alpha.numerator
                if lhs != rhs:
                    raise ValueError("branch constant does not match the constant term")
        al = mpq(alpha.numerator, alpha.denominator)
        inv_a0 = f.inv(a0)
        mul = f.mul
        tail = self._nonzero_tail()
        out = [None] * len(self.c)
        out[0] = y0
        for k, d1, d2, t in self._walk():
            if not k:
                continue
            acc = None
            for j, e1, e2, aj in tail:
                if e1 > d1:
                    break
                if e2 <= d2:
                    b = out[k - j]
                    if b is not None:
                        wgt = al * (e1 + e2) - (t - e1 - e2)
                        if wgt:
                            p = _tscale(mul(aj, b), wgt)
                            acc = p if acc is None else _tadd(acc, p)
            if acc is not None and any(acc):
                out[k] = _tscale(mul(acc, inv_a0), mpq(1, t))
        return self._new(f, self.trunc, _clean(out))

    def nth_root(self, n, branch_constant=1):
        """The n-th root whose constant term is ``branch_constant``."""
        return self.power(Fraction(1, n), branch_constant)

    def exp(self):
        if self.c[0] is not None:
            raise ValueError("exp needs a series with zero constant term")
        f = self.field
        mul = f.mul
        tail = self._nonzero_tail()
        out = [None] * len(self.c)
        out[0] = f.one
        for k, d1, d2, t in self._walk():
            if not k:
                continue
            acc = None
            for j, e1, e2, aj in tail:
                if e1 > d1:
                    break
                if e2 <= d2:
                    b = out[k - j]
                    if b is not None:
                        p = _tscale(mul(aj, b), mpq(e1 + e2))
                        acc = p if acc is None else _tadd(acc, p)
            if acc is not None and any(acc):
                out[k] = _tscale(acc, mpq(1, t))
        return self._new(f, self.trunc, _clean(out))

    def log(self):
        f = self.field
        if self.c[0] != f.one:
            raise ValueError("log needs a series with constant term 1")
        mul = f.mul
        tail = self._nonzero_tail()
        out = [None] * len(self.c)
        for k, d1, d2, t in self._walk():
            if not k:
                continue
            acc = self.c[k]
            acc = _tscale(acc, mpq(t)) if acc is not None else None
            for j, e1, e2, aj in tail:
                if e1 > d1:
                    break
                if e2 <= d2 and j != k:
                    b = out[k - j]
                    if b is not None:
                        p = _tscale(mul(aj, b), mpq(t - e1 - e2))
                        acc = tuple([-x for x in p]) if acc is None else _tsub(acc, p)
            if acc is not None and any(acc):
                out[k] = _tscale(acc, mpq(1, t))
        return self._new(f, self.trunc, _clean(out))

    # slicing ------------------------------------------------------------

    def slice(self, k, var="q1"):
        """Coefficient of q2^k as a UniSeries in q1."""
        n1, n2 = self.trunc
        if not 0 <= k <= n2:
            raise TruncationError(f"q2-degree {k} outside truncation {self.trunc}")
        w = n2 + 1
        return UniSeries._make(self.field, n1, [self.c[d1 * w + k] for d1 in range(n1 + 1)], var)

    # serialization -------------------------------------------------------

    def to_json_obj(self):
        terms = []
        for d, v in self.items():
            terms.append({"exp": list(d), "val": v.to_literal()})
        return {"vars": ["q1", "q2"], "trunc": list(self.trunc), "zeta_order": self.order,
                "terms": terms}

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def __repr__(self):
        body = " + ".join(f"({v})*q1^{d[0]}*q2^{d[1]}" for d, v in list(self.items())[:6])
        more = " + ..." if sum(1 for _ in self.items()) > 6 else ""
        return f"BiSeries[{self.trunc}, N={self.order}]({body or '0'}{more})"


def _mul_flat(field, trunc, a, b):
    n1, n2 = trunc
    w = n2 + 1
    mul = field.mul
    out = [None] * len(a)
    nzb = [(j, j // w, j % w, bj) for j, bj in enumerate(b) if bj is not None]
    if not nzb:
        return out
    deg1 = field.degree == 1
    for i, ai in enumerate(a):
        if ai is None:
            continue
        d1, d2 = divmod(i, w)
        r1, r2 = n1 - d1, n2 - d2
        if deg1:
            x = ai[0]
            for j, e1, e2, bj in nzb:
                if e1 > r1:
                    break
                if e2 <= r2:
                    k = i + j
                    o = out[k]
                    out[k] = (x * bj[0],) if o is None else (o[0] + x * bj[0],)
        else:
            for j, e1, e2, bj in nzb:
                if e1 > r1:
                    break
                if e2 <= r2:
                    k = i + j
                    p = mul(ai, bj)
                    o = out[k]
                    out[k] = p if o is None else _tadd(o, p)
    return _clean(out)


class UniSeries(BiSeries):
    """Truncated power series in one variable (stored with trunc (N, 0))."""

    __slots__ = ("_var",)

    def __init__(self, n, order=1, coeffs=None, var="q"):
        if isinstance(coeffs, (list, tuple)):
            coeffs = {(d, 0): v for d, v in enumerate(coeffs)}
        elif coeffs:
            coeffs = {(d, 0): v for d, v in dict(coeffs).items()}
        super().__init__((n, 0), order, coeffs)
        self._var = var

    @classmethod
    def _make(cls, field, n, c, var="q"):
        obj = object.__new__(cls)
        obj.field = field
        obj.trunc = (n, 0)
        obj.c = c
        obj._var = var
        return obj

    @property
    def var(self):
        return self._var

    @property
    def N(self):
        return self.trunc[0]

    def _new(self, field, trunc, c):
        if trunc[1] != 0:
            return BiSeries._new(self, field, trunc, c)
        return UniSeries._make(field, trunc[0], c, self._var)

    @classmethod
    def from_function(cls, f, n, order=1, var="q"):
        return UniSeries(n, order, [f(d) for d in range(n + 1)], var)

    @classmethod
    def variable(cls, n, order=1, var="q"):
        return UniSeries(n, order, {1: 1} if n >= 1 else None, var)

    @classmethod
    def one(cls, n, order=1, var="q"):
        return UniSeries(n, order, [1], var)

    def __getitem__(self, key):
        if isinstance(key, tuple):
            return BiSeries.__getitem__(self, key)
        return BiSeries.__getitem__(self, (key, 0))

    def coefficients(self):
        """All coefficients q^0..q^N as CycloRationals."""
        return [self[d] for d in range(self.N + 1)]

    def truncate(self, trunc):
        if isinstance(trunc, int):
            trunc = (trunc, 0)
        return BiSeries.truncate(self, trunc)

    def lift(self, n2):
        """The same series viewed as a BiSeries with q2-truncation n2."""
        w = n2 + 1
        c = [None] * ((self.N + 1) * w)
        for d, v in enumerate(self.c):
            c[d * w] = v
        return BiSeries._new(self, self.field, (self.N, n2), c)

    def rename(self, var):
        return UniSeries._make(self.field, self.N, list(self.c), var)

    def to_json_obj(self):
        terms = [{"exp": [d[0]], "val": v.to_literal()} for d, v in self.items()]
        return {"vars": [self._var], "trunc": [self.N], "zeta_order": self.order, "terms": terms}

    def __repr__(self):
        items = [(d[0], v) for d, v in self.items()]
        body = " + ".join(f"({v})*{self._var}^{d}" for d, v in items[:8])
        more = " + ..." if len(items) > 8 else ""
        return f"UniSeries[{self._var}^{self.N}, N={self.order}]({body or '0'}{more})"


def coefficient_slice(a, k):
    """Coefficient of q2^k of ``a`` as a series in q1."""
    return a.slice(k)


def substitute(a, s):
    """a(s) for a univariate ``a`` and a series ``s`` without constant term.

    ``s`` must be divisible by one of the variables so that the terms of
    ``a`` beyond its truncation cannot reach the result's truncation.
    """
    if not isinstance(a, UniSeries):
        raise TypeError("substitute expects a UniSeries on the left")
    if s.c[0] is not None:
        raise ValueError("substituted series must have zero constant term")
    n = a.N
    w = s.trunc[1] + 1
    nz = [(k // w, k % w) for k, v in enumerate(s.c) if v is not None]
    if all(d1 >= 1 for d1, _ in nz):
        trunc = (min(s.trunc[0], n), s.trunc[1])
    elif all(d2 >= 1 for _, d2 in nz):
        trunc = (s.trunc[0], min(s.trunc[1], n))
    else:
        raise TruncationError("substituted series must be divisible by q1 or by q2")
    if isinstance(s, UniSeries):
        s = s.truncate((trunc[0], 0))
        s = UniSeries._make(s.field, trunc[0], s.c, s.var)
    else:
        s = s.truncate(trunc)
    if a.field is not s.field:
        m = common_order(a.order, s.order)
        a, s = a.embed(m), s.embed(m)
    out = s.zero_like()
    for d in range(n, -1, -1):
        out = out * s
        v = a.c[d]
        if v is not None:
            out = out + CycloRational._raw(a.field, v)
    return out


def reversion(s):
    """Compositional inverse t of s (s(t(x)) = x) by Lagrange inversion."""
    if not isinstance(s, UniSeries):
        raise TypeError("reversion expects a UniSeries")
    n = s.N
    if s.c[0] is not None:
        raise ValueError("reversion needs zero constant term")
    if n < 1 or s.c[1] is None:
        raise ValueError("reversion needs a nonzero linear coefficient")
    # phi(w) = w / s(w), truncated to w^(n-1)
    shifted = UniSeries._make(s.field, n - 1, s.c[1:], s.var)
    phi = shifted.invert()
    out = [None] * (n + 1)
    pw = phi.one_like()
    for k in range(1, n + 1):
        pw = pw * phi
        v = pw.c[k - 1]
        if v is not None:
            out[k] = _tscale(v, mpq(1, k))
    return UniSeries._make(s.field, n, out, s.var)


def series_from_json(obj):
    """Inverse of ``to_json`` / ``to_json_obj`` for Bi- and UniSeries."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    order = int(obj["zeta_order"])
    f = CyclotomicField(order)
    trunc = obj["trunc"]
    if len(obj["vars"]) == 1:
        out = UniSeries(int(trunc[0]), order, var=obj["vars"][0])
        for t in obj["terms"]:
            (d,) = t["exp"]
            out.c[out._idx(int(d), 0)] = f.from_literal(t["val"])
    else:
        out = BiSeries(tuple(trunc), order)
        for t in obj["terms"]:
            d1, d2 = t["exp"]
            out.c[out._idx(int(d1), int(d2))] = f.from_literal(t["val"])
    out.c = _clean(out.c)
    return out

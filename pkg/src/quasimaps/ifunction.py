"""
Small I-functions and class-valued series in z.

The I-function of a preset is the hypergeometric sum

    I = sum_d q1^d1 q2^d2  Num_d(H, z) / Den_d(H, z)

with Den_d = prod_i prod_{k=1..d1} (H1 - l1_i + k z) * prod_j prod_{k=1..d2} (H2 - l2_j + k z)
and Num_d = prod_{k=1..t.d} (t1 H1 + t2 H2 + k z) for an a-twist, or
prod_{k=0..|t.d|-1} (t1 H1 + t2 H2 - k z) for a local b-twist.

Each summand is a power of z times a product of factors (1 + c/z)^(+-1),
so it expands exactly in w = 1/z.  ``ZSeries`` stores such an expansion
restricted to the fixed points: for every power z^m in the exact window
[lo, hi] and every fixed point, one BiSeries.
"""

from __future__ import annotations

import json

from .field import CycloRational, embed_rational
from .series import BiSeries

__all__ = [
    "ZSeries",
    "WindowError",
    "small_i_function",
    "free_i_expansion",
    "i_coefficient_table",
    "insertion_operator",
    "LOCAL_TABLE_NAMES",
    "reduce_free_expansion",
]


class WindowError(ValueError):
    """A z-power outside the allowed window would be needed."""


class ZSeries:
    """sum_m z^m F_m with F_m a class-valued BiSeries, stored at fixed points.

    ``data[m][p]`` is the restriction of F_m to fixed point p.  Powers
    m < lo are unknown (truncated); powers m > hi vanish exactly.
    """

    __slots__ = ("ring", "trunc", "lo", "hi", "data", "window")

    def __init__(self, ring, trunc, lo, hi, data, window=(-64, 64)):
        self.ring = ring
        self.trunc = tuple(trunc)
        self.lo = lo
        self.hi = hi
        self.data = data
        self.window = tuple(window)
        if lo < window[0] or hi > window[1]:
            raise WindowError(f"z-powers [{lo}, {hi}] exceed window {self.window}")

    @property
    def npoints(self):
        return len(self.ring.fixed_points)

    def _zero(self):
        return BiSeries(self.trunc, self.ring.order)

    def at(self, m, p):
        if m < self.lo:
            raise WindowError(f"z^{m} is below the exact range starting at z^{self.lo}")
        if m > self.hi:
            return self._zero()
        return self.data[m][p]

    def copy_with(self, lo, hi, data, trunc=None):
        return ZSeries(self.ring, trunc or self.trunc, lo, hi, data, self.window)

    # operators ------------------------------------------------------------

    def M(self, axis):
        """Apply M_a = H_a + z q_a d/dq_a."""
        if self.hi + 1 > self.window[1]:
            raise WindowError(f"z^{self.hi + 1} exceeds window {self.window}")
        hv = [self.ring.point_values(p)[axis - 1] for p in range(self.npoints)]
        data = {}
        for m in range(self.lo + 1, self.hi + 2):
            row = []
            for p in range(self.npoints):
                acc = None
                if m <= self.hi:
                    acc = self.data[m][p] * hv[p]
                prev = self.data[m - 1][p].euler(axis)
                acc = prev if acc is None else acc + prev
                row.append(acc)
            data[m] = row
        return self.copy_with(self.lo + 1, self.hi + 1, data)

    def times_z(self, k=1):
        if self.hi + k > self.window[1]:
            raise WindowError(f"z^{self.hi + k} exceeds window {self.window}")
        return self.copy_with(self.lo + k, self.hi + k, {m + k: v for m, v in self.data.items()})

    def __mul__(self, other):
        """Multiply by a q-series or scalar (central in z)."""
        data = {m: [f * other for f in row] for m, row in self.data.items()}
        trunc = self.trunc
        if isinstance(other, BiSeries):
            trunc = (min(trunc[0], other.trunc[0]), min(trunc[1], other.trunc[1]))
        return self.copy_with(self.lo, self.hi, data, trunc)

    __rmul__ = __mul__

    def __add__(self, other):
        lo = max(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        data = {}
        for m in range(lo, hi + 1):
            if m > other.hi:
                data[m] = list(self.data[m])
            elif m > self.hi:
                data[m] = list(other.data[m])
            else:
                data[m] = [a + b for a, b in zip(self.data[m], other.data[m])]
        trunc = (min(self.trunc[0], other.trunc[0]), min(self.trunc[1], other.trunc[1]))
        return self.copy_with(lo, hi, data, trunc)

    def __neg__(self):
        return self.copy_with(self.lo, self.hi, {m: [-f for f in row] for m, row in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def restrict_lo(self, lo):
        """Forget the powers below ``lo``."""
        if lo < self.lo:
            raise WindowError("cannot extend the exact range downwards")
        return self.copy_with(lo, self.hi, {m: v for m, v in self.data.items() if m >= lo})

    # views ------------------------------------------------------------------

    def z_coefficient(self, m):
        """Coefficient of z^m in the monomial basis: list of BiSeries."""
        vals = [self.at(m, p) for p in range(self.npoints)]
        out = self.ring.interpolate_vector(vals)
        return [v if v is not None else self._zero() for v in out]

    def coefficient(self, d, m):
        """Class-valued coefficient of q^d z^m."""
        from .cohomology import CohomClass
        return CohomClass(self.ring, [s[d] for s in self.z_coefficient(m)])

    def is_zero(self):
        return all(f.is_zero() for row in self.data.values() for f in row)

    def first_nonzero(self):
        """(z-power, fixed point, q-exponent) of the first nonzero entry."""
        for m in range(self.lo, self.hi + 1):
            for p, f in enumerate(self.data[m]):
                d = f.first_nonzero()
                if d is not None:
                    return m, self.ring.fixed_points[p], d
        return None

    def to_json_obj(self):
        terms = []
        ring = self.ring
        for m in range(self.lo, self.hi + 1):
            comps = self.z_coefficient(m)
            n1, n2 = self.trunc
            for d1 in range(n1 + 1):
                for d2 in range(n2 + 1):
                    vals = [c[(d1, d2)] for c in comps]
                    if any(vals):
                        terms.append({"exp": [d1, d2], "z_exp": m,
                                      "class": [v.to_literal() for v in vals]})
        terms.sort(key=lambda t: (t["exp"], t["z_exp"]))
        return {"vars": ["q1", "q2"], "trunc": list(self.trunc), "zeta_order": ring.order,
                "basis": [f"H1^{a}*H2^{b}" for a, b in ring.basis], "terms": terms}

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def __repr__(self):
        return f"ZSeries(trunc={self.trunc}, z^[{self.lo},{self.hi}], points={self.npoints})"


def insertion_operator(F, axis):
    """H_a + z D_a applied termwise, i.e. multiply the q^d term by H_a + d_a z."""
    return F.M(axis)


# ---------------------------------------------------------------------------
# summand bookkeeping


def _step_factors(g, d, axis):
    """Factors picked up going from degree d to d + e_axis.

    Returns (numerator list, denominator list); each entry is a pair
    (k, form) meaning the factor form + k z, where form is a dict giving
    the linear form in H and constants: {'H1': c, 'H2': c, '1': c}.
    A numerator entry with k = 0 carries no z.
    """
    t1, t2 = g.twist
    ell = {"H1": t1, "H2": t2}
    td = t1 * d[0] + t2 * d[1]
    ta = g.twist[axis - 1]
    num = []
    if g.local:
        # prod_{k=m..m'-1} (ell - k z) with m = |t.d|
        m, m2 = -td, -(td + ta)
        for k in range(m, m2):
            num.append((-k, ell))
    else:
        for k in range(td + 1, td + ta + 1):
            num.append((k, ell))
    den = []
    hk = "H1" if axis == 1 else "H2"
    da = d[axis - 1] + 1
    for lam in (g.weights1 if axis == 1 else g.weights2):
        den.append((da, {hk: 1, "1": -lam}))
    return num, den


def _eval_form(form, h1, h2):
    v = form.get("1", 0)
    return v + h1 * form.get("H1", 0) + h2 * form.get("H2", 0)


def _degrees(trunc):
    n1, n2 = trunc
    for d1 in range(n1 + 1):
        for d2 in range(n2 + 1):
            yield (d1, d2)


def _predecessor(d):
    if d[1] > 0:
        return (d[0], d[1] - 1), 2
    return (d[0] - 1, d[1]), 1


def _summands_at_point(g, trunc, depth, h1, h2):
    """{d: (prefactor, z exponent, [w^0..w^depth])} at one fixed point."""
    order = g.order
    one = embed_rational(1, order)
    zero = embed_rational(0, order)
    out = {(0, 0): (one, 0, [one] + [zero] * depth)}
    for d in _degrees(trunc):
        if d == (0, 0):
            continue
        prev, axis = _predecessor(d)
        pre, e, W = out[prev]
        W = list(W)
        num, den = _step_factors(g, prev, axis)
        for k, form in num:
            c = _eval_form(form, h1, h2)
            if k == 0:
                pre = pre * c
                continue
            pre = pre * k
            e += 1
            r = c / k
            if r:
                for n in range(depth, 0, -1):
                    W[n] = W[n] + r * W[n - 1]
        for k, form in den:
            c = _eval_form(form, h1, h2)
            pre = pre / k
            e -= 1
            r = c / k
            if r:
                for n in range(1, depth + 1):
                    W[n] = W[n] - r * W[n - 1]
        out[d] = (pre, e, W)
    return out


def small_i_function(g, trunc, z_window=(-4, 8)):
    """Restrictions of the I-function to the fixed points.

    The result is exact for z-powers in [z_window[0], 0]; there are no
    positive powers.
    """
    m_lo, m_hi = z_window
    if m_lo > 0:
        raise WindowError("the window must reach z^0")
    ring = g.ring()
    depth = -m_lo + 1
    data = {m: [] for m in range(m_lo, 1)}
    for p in range(len(ring.fixed_points)):
        h1, h2 = ring.point_values(p)
        summ = _summands_at_point(g, trunc, depth, h1, h2)
        per_m = {m: {} for m in range(m_lo, 1)}
        for d, (pre, e, W) in summ.items():
            for m in range(m_lo, min(e, 0) + 1):
                n = e - m
                if 0 <= n <= depth and W[n]:
                    per_m[m][d] = pre * W[n]
        for m in range(m_lo, 1):
            data[m].append(BiSeries(trunc, g.order, per_m[m]))
    return ZSeries(ring, trunc, m_lo, 0, data, window=(m_lo, m_hi))


# ---------------------------------------------------------------------------
# free expansion in H1, H2 (no ring relations)


def _pmul_form(P, form, scale):
    """P * (scale * form) for a polynomial dict P and a linear form."""
    out = {}
    for (a, b), c in P.items():
        for key, f in form.items():
            if not f:
                continue
            mono = (a + 1, b) if key == "H1" else (a, b + 1) if key == "H2" else (a, b)
            out[mono] = out.get(mono, 0) + c * f * scale
    return out


def _padd(P, Q, sign=1):
    out = dict(P)
    for k, v in Q.items():
        out[k] = out.get(k, 0) + v * sign
    return out


def free_i_expansion(g, trunc, depth=3):
    """Expansion of I in 1/z with H1, H2 kept free.

    Returns {(m, (a, b)): BiSeries} for the coefficient of z^(-m) H1^a H2^b,
    m = 0..depth.
    """
    order = g.order
    one = embed_rational(1, order)
    summ = {(0, 0): (one, 0, [{(0, 0): one}] + [{} for _ in range(depth + 1)])}
    for d in _degrees(trunc):
        if d == (0, 0):
            continue
        prev, axis = _predecessor(d)
        pre, e, W = summ[prev]
        W = [dict(P) for P in W]
        num, den = _step_factors(g, prev, axis)
        for k, form in num:
            if k == 0:
                W = [_pmul_form(P, form, one) for P in W]
                continue
            pre = pre * k
            e += 1
            for n in range(depth + 1, 0, -1):
                W[n] = _padd(W[n], _pmul_form(W[n - 1], form, one / k))
        for k, form in den:
            pre = pre / k
            e -= 1
            for n in range(1, depth + 2):
                W[n] = _padd(W[n], _pmul_form(W[n - 1], form, one / k), -1)
        summ[d] = (pre, e, W)
    acc = {}
    for d, (pre, e, W) in summ.items():
        for n, P in enumerate(W):
            m = n - e
            if not 0 <= m <= depth:
                continue
            for mono, c in P.items():
                v = pre * c
                if v:
                    acc.setdefault((m, mono), {})[d] = v
    return {key: BiSeries(trunc, order, vals) for key, vals in sorted(acc.items())}


LOCAL_TABLE_NAMES = {
    (1, (1, 0)): "I11", (1, (0, 1)): "I12",
    (2, (2, 0)): "I21", (2, (1, 1)): "I22", (2, (0, 2)): "I23", (2, (1, 0)): "I24", (2, (0, 1)): "I25",
    (3, (3, 0)): "I31", (3, (2, 1)): "I32", (3, (1, 2)): "I33", (3, (0, 3)): "I34",
    (3, (2, 0)): "I35", (3, (1, 1)): "I36", (3, (0, 2)): "I37", (3, (1, 0)): "I38", (3, (0, 1)): "I39",
}


def i_coefficient_table(g, trunc, depth=3):
    """Named coefficient series of the free expansion.

    For the local preset the names I11 .. I39 follow the monomial order
    used in the relations module; other presets use keys "z-m:H1^a*H2^b".
    Returns (table, leftovers) where leftovers lists nonzero entries that
    have no name (for the local preset only the z^0 constant 1).
    """
    free = free_i_expansion(g, trunc, depth)
    table, left = {}, {}
    zero = BiSeries(trunc, g.order)
    if g.local:
        for key, name in LOCAL_TABLE_NAMES.items():
            if key[0] <= depth:
                table[name] = free.get(key, zero)
        for key, s in free.items():
            if key not in LOCAL_TABLE_NAMES and key != (0, (0, 0)) and not s.is_zero():
                left[f"z-{key[0]}:H1^{key[1][0]}*H2^{key[1][1]}"] = s
    else:
        for (m, (a, b)), s in free.items():
            table[f"z-{m}:H1^{a}*H2^{b}"] = s
    return table, left


def reduce_free_expansion(g, free, m):
    """Restrict the z^(-m) part of a free expansion to the fixed points."""
    ring = g.ring()
    out = []
    for p in range(len(ring.fixed_points)):
        h1, h2 = ring.point_values(p)
        acc = None
        for (mm, (a, b)), s in free.items():
            if mm != m:
                continue
            t = s * (h1 ** a * h2 ** b)
            acc = t if acc is None else acc + t
        out.append(acc)
    return out

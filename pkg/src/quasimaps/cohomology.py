"""
Equivariant cohomology of P^n1 x P^n2 with the torus weights specialised
to fixed cyclotomic numbers.

With weights l1_0..l1_n1 and l2_0..l2_n2 the ring is

    Q(zeta)[H1, H2] / (prod_i (H1 - l1_i), prod_j (H2 - l2_j)),

a free module with monomial basis H1^a H2^b (a <= n1, b <= n2), listed in
lexicographic order of (a, b).  Restriction to the fixed point (i, j)
sends H1 -> l1_i and H2 -> l2_j; for distinct weights this is a ring
isomorphism onto functions on the fixed points, and its inverse is
Lagrange interpolation.

All linear maps here act on vectors whose entries only need ``+`` and
multiplication by a CycloRational, so the same code converts cohomology
classes and class-valued power series.
"""

from __future__ import annotations

from itertools import product

from .field import CycloRational, embed_rational

__all__ = ["CohomRing", "CohomClass", "local_p1p1_classes"]


def _lincomb(row, vec):
    """sum_k row[k] * vec[k], skipping zero coefficients."""
    out = None
    for c, v in zip(row, vec):
        if c:
            t = v * c if not (c == 1) else v
            out = t if out is None else out + t
    return out


class CohomRing:
    """Specialised equivariant cohomology ring of P^n1 x P^n2."""

    def __init__(self, n1, n2, weights1, weights2, order):
        self.n = (n1, n2)
        self.order = order
        self.weights = (tuple(_as_cyclo(w, order) for w in weights1),
                        tuple(_as_cyclo(w, order) for w in weights2))
        if len(self.weights[0]) != n1 + 1 or len(self.weights[1]) != n2 + 1:
            raise ValueError("need n+1 weights on each factor")
        for ws in self.weights:
            for a in range(len(ws)):
                for b in range(a):
                    if ws[a] == ws[b]:
                        raise ValueError("weights on a factor must be distinct")
        self.basis = [(a, b) for a in range(n1 + 1) for b in range(n2 + 1)]
        self.fixed_points = [(i, j) for i in range(n1 + 1) for j in range(n2 + 1)]
        self.rank = len(self.basis)
        self._restrict = [[self.weights[0][i] ** a * self.weights[1][j] ** b for (a, b) in self.basis]
                          for (i, j) in self.fixed_points]
        l1 = _lagrange(self.weights[0])
        l2 = _lagrange(self.weights[1])
        # interp[basis][fixed point]
        self._interp = [[l1[i][a] * l2[j][b] for (i, j) in self.fixed_points] for (a, b) in self.basis]

    def __repr__(self):
        return f"CohomRing(n={self.n}, order={self.order})"

    def point_values(self, p):
        """(H1, H2) restricted to fixed point index p."""
        i, j = self.fixed_points[p]
        return self.weights[0][i], self.weights[1][j]

    def fixed_point_index(self, i, j):
        return self.fixed_points.index((i, j))

    def basis_index(self, a, b):
        return self.basis.index((a, b))

    # vector maps --------------------------------------------------------

    def restrict_vector(self, vec):
        """Monomial coordinates -> values at the fixed points."""
        return [_lincomb(row, vec) for row in self._restrict]

    def interpolate_vector(self, values):
        """Values at the fixed points -> monomial coordinates."""
        return [_lincomb(row, values) for row in self._interp]

    # classes --------------------------------------------------------------

    def zero(self):
        return CohomClass(self, [self._c(0)] * self.rank)

    def one(self):
        return self.monomial(0, 0)

    def _c(self, v):
        return v if isinstance(v, CycloRational) else embed_rational(v, self.order)

    def monomial(self, a, b):
        """H1^a H2^b, reduced by the ring relations."""
        if a <= self.n[0] and b <= self.n[1]:
            coeffs = [self._c(1 if m == (a, b) else 0) for m in self.basis]
            return CohomClass(self, coeffs)
        return self.from_polynomial({(a, b): 1})

    def H(self, axis):
        return self.monomial(1, 0) if axis == 1 else self.monomial(0, 1)

    def from_polynomial(self, poly):
        """Reduce a polynomial {(a, b): coeff} in H1, H2 into the ring."""
        vals = []
        for p in range(len(self.fixed_points)):
            h1, h2 = self.point_values(p)
            acc = self._c(0)
            for (a, b), c in poly.items():
                acc = acc + h1 ** a * h2 ** b * c
            vals.append(acc)
        return self.from_fixed_point_values(vals)

    def from_fixed_point_values(self, vals):
        return CohomClass(self, self.interpolate_vector([self._c(v) for v in vals]))

    def relations(self):
        """The two defining relations as polynomials {(a, b): coeff}."""
        out = []
        for axis, ws in enumerate(self.weights):
            poly = {0: self._c(1)}
            for w in ws:
                new = {}
                for k, c in poly.items():
                    new[k + 1] = new.get(k + 1, self._c(0)) + c
                    new[k] = new.get(k, self._c(0)) - c * w
                poly = new
            out.append({((k, 0) if axis == 0 else (0, k)): c for k, c in poly.items()})
        return out


def _as_cyclo(w, order):
    if isinstance(w, CycloRational):
        return w.embed(order) if w.order != order else w
    return embed_rational(w, order)


def _lagrange(ws):
    """Rows: fixed point i -> monomial coefficients of the i-th Lagrange basis polynomial."""
    n = len(ws)
    out = []
    for i in range(n):
        poly = [ws[i] * 0 + 1]
        den = ws[i] * 0 + 1
        for k in range(n):
            if k == i:
                continue
            new = [ws[i] * 0] * (len(poly) + 1)
            for e, c in enumerate(poly):
                new[e + 1] = new[e + 1] + c
                new[e] = new[e] - c * ws[k]
            poly = new
            den = den * (ws[i] - ws[k])
        inv = den.inverse()
        out.append([c * inv for c in poly])
    return out


class CohomClass:
    """A class in the monomial basis, coefficients are CycloRationals."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = list(coeffs)

    def restrict_to_fixed_points(self):
        return self.ring.restrict_vector(self.coeffs)

    def __add__(self, other):
        if isinstance(other, CohomClass):
            return CohomClass(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        return self + self.ring.one() * other

    __radd__ = __add__

    def __neg__(self):
        return CohomClass(self.ring, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CohomClass):
            va = self.restrict_to_fixed_points()
            vb = other.restrict_to_fixed_points()
            return self.ring.from_fixed_point_values([a * b for a, b in zip(va, vb)])
        return CohomClass(self.ring, [a * other for a in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CohomClass):
            va = self.restrict_to_fixed_points()
            vb = other.restrict_to_fixed_points()
            return self.ring.from_fixed_point_values([a / b for a, b in zip(va, vb)])
        return CohomClass(self.ring, [a / other for a in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, CohomClass):
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        return self == self.ring.one() * other

    __hash__ = None

    def is_zero(self):
        return all(not a for a in self.coeffs)

    def to_literals(self):
        return [c.to_literal() for c in self.coeffs]

    def __repr__(self):
        terms = [f"({c})*H1^{a}*H2^{b}" for c, (a, b) in zip(self.coeffs, self.ring.basis) if c]
        return " + ".join(terms) if terms else "0"


def restrict_to_fixed_points(c):
    return c.restrict_to_fixed_points()


def interpolate_from_fixed_points(ring, values):
    return ring.from_fixed_point_values(values)


def local_p1p1_classes(ring):
    """Idempotent classes phi_ij, dual classes phi^ij and weights e_ij.

    For weights (a0, a1; b0, b1) with indices taken mod 2:
        e_ij   = (a_i - a_{i+1})(b_j - b_{j+1})(-2 a_i - 2 b_j)
        phi_ij = (-2 a_i - 2 b_j)(H1 - a_{i+1})(H2 - b_{j+1}) / e_ij
        phi^ij = e_ij phi_ij
    Returns dicts keyed by (i, j).
    """
    if ring.n != (1, 1):
        raise ValueError("local P1xP1 classes need n = (1, 1)")
    al, be = ring.weights
    H1, H2 = ring.H(1), ring.H(2)
    e, lower, upper = {}, {}, {}
    for i, j in product(range(2), range(2)):
        tw = -2 * al[i] - 2 * be[j]
        e[(i, j)] = (al[i] - al[(i + 1) % 2]) * (be[j] - be[(j + 1) % 2]) * tw
        lower[(i, j)] = (H1 - al[(i + 1) % 2]) * (H2 - be[(j + 1) % 2]) * (tw / e[(i, j)])
        upper[(i, j)] = lower[(i, j)] * e[(i, j)]
    return lower, upper, e

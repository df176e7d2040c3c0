"""
Asymptotic data at a fixed point and exact ring-membership fitting.

At a fixed point p the restricted I-function has the form

    I|_p = exp(U/z) (R_0 + R_1 z + R_2 z^2 + ...)

with L = l1 + D1 U and UD = l2 + D2 U.  Substituting into the two
Picard-Fuchs operators (M_a -> Lam_a + z D_a) gives one equation per
power of z.  The z^0 equations involve only (L, UD); the z^(n+1)
equations are linear in R_n.  Both are solved one total q-degree at a
time: at degree d the new coefficient of L (resp. UD) enters the first
(resp. second) leading equation with the nonzero factor
prod_{k != i}(l1_i - l1_k), and the new coefficient of R_n enters with
d_a times the same kind of factor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .field import CycloRational, embed_rational
from .picard_fuchs import pf_operators
from .series import BiSeries, UniSeries

__all__ = [
    "AsymptoticData",
    "SolveError",
    "solve_leading",
    "solve_R",
    "solve_asymptotics",
    "closed_form_L_local",
    "FitResult",
    "ring_fit",
    "laurent_basis",
    "adaptive_laurent_fit",
]


class SolveError(ArithmeticError):
    pass


@dataclass
class AsymptoticData:
    geometry: object
    point: tuple
    trunc: tuple
    L: BiSeries
    UD: BiSeries
    R: list = dc_field(default_factory=list)
    log: list = dc_field(default_factory=list)

    @property
    def Lam(self):
        return (self.L, self.UD)

    def L_slice(self, k=0):
        return self.L.slice(k)

    def residuals(self, kmax=None):
        """z^0..z^kmax coefficients of both conjugated operators applied to R."""
        kmax = len(self.R) if kmax is None else kmax
        return [op.conjugated_apply(self.Lam, self.R, kmax) for op in pf_operators(self.geometry)]

    def integrability_defect(self):
        return self.L.euler(2) - self.UD.euler(1)

    def log_json(self):
        return json.dumps(self.log, separators=(",", ":"))


def _pivots(g, point):
    i, j = point
    f = []
    for axis, k in ((1, i), (2, j)):
        ws = g.weights1 if axis == 1 else g.weights2
        prod = embed_rational(1, g.order)
        for m, w in enumerate(ws):
            if m != k:
                prod = prod * (ws[k] - w)
        if not prod:
            raise SolveError(f"singular pivot at fixed point {point}")
        f.append(prod)
    return f


def _levels(trunc):
    n1, n2 = trunc
    for t in range(1, n1 + n2 + 1):
        yield t, [(d1, t - d1) for d1 in range(max(0, t - n2), min(n1, t) + 1)]


def _set(s, d, value):
    s.c[s._idx(*d)] = value.c if value else None


def solve_leading(g, point, trunc, log=None):
    """(L, UD) at fixed point ``point`` through ``trunc``."""
    i, j = point
    ops = pf_operators(g)
    piv = _pivots(g, point)
    L = BiSeries.constant(g.weights1[i], trunc, g.order)
    UD = BiSeries.constant(g.weights2[j], trunc, g.order)
    for t, degs in _levels(trunc):
        E1 = ops[0].leading((L, UD))
        E2 = ops[1].leading((L, UD))
        for d in degs:
            _set(L, d, -E1[d] / piv[0])
            _set(UD, d, -E2[d] / piv[1])
            if log is not None:
                log.append({"degree": list(d), "unknown": "L", "pivot-equation": "P1:z^0"})
                log.append({"degree": list(d), "unknown": "UD", "pivot-equation": "P2:z^0"})
    return L, UD


def solve_R(g, point, K, trunc, Lam=None, log=None):
    """R_0..R_K with R_0(0) = 1 and R_n(0) = 0 for n >= 1."""
    if Lam is None:
        Lam = solve_leading(g, point, trunc, log)
    ops = pf_operators(g)
    piv = _pivots(g, point)
    R = []
    for n in range(K + 1):
        Rn = BiSeries.constant(1 if n == 0 else 0, trunc, g.order)
        R.append(Rn)
        for t, degs in _levels(trunc):
            res = None
            for d in degs:
                a = 1 if d[0] > 0 else 2
                if res is None or res[0] != a:
                    res = (a, ops[a - 1].conjugated_apply(Lam, R, n + 1)[n + 1])
                slope = piv[a - 1] * d[a - 1]
                _set(Rn, d, -res[1][d] / slope)
                if log is not None:
                    log.append({"degree": list(d), "unknown": f"R{n}", "pivot-equation": f"P{a}:z^{n + 1}"})
    return R


def solve_asymptotics(g, point, trunc, K=1, check=True):
    log = []
    L, UD = solve_leading(g, point, trunc, log)
    R = solve_R(g, point, K, trunc, (L, UD), log)
    data = AsymptoticData(g, tuple(point), tuple(trunc), L, UD, R, log)
    if check:
        bad = _check(data)
        if bad:
            raise SolveError(f"residual check failed at {bad}")
    return data


def _check(data):
    if not data.integrability_defect().is_zero():
        return ("integrability", data.integrability_defect().first_nonzero())
    for a, res in enumerate(data.residuals(len(data.R))):
        for k, r in enumerate(res):
            if not r.is_zero():
                return (f"P{a + 1}", k, r.first_nonzero())
    return None


def closed_form_L_local(g, point, n):
    """(4 b_j q + a_i sqrt(1 + 4(b_j^2 - 1) q)) / (1 - 4 q) as a q1-series."""
    i, j = point
    al, be = g.weights1[i], g.weights2[j]
    q = UniSeries.variable(n, g.order, "q1")
    root = (1 + q * (4 * (be * be - 1))).nth_root(2, 1)
    return (q * (4 * be) + root * al) / (1 - 4 * q)


# ---------------------------------------------------------------------------
# exact fitting


@dataclass
class FitResult:
    status: str                 # "ok", "no-solution", "underdetermined", "validation-failed", "insufficient-order"
    coeffs: list = None
    names: list = None
    fit_order: int = None
    check_order: int = None
    mismatch: tuple = None

    @property
    def ok(self):
        return self.status == "ok"

    def to_json_obj(self):
        return {"status": self.status,
                "coefficients": None if self.coeffs is None else
                {n: c.to_literal() for n, c in zip(self.names, self.coeffs) if c},
                "fit_order": self.fit_order, "check_order": self.check_order,
                "first_mismatch": self.mismatch}


def _solve_exact(rows, rhs, order):
    """Gaussian elimination over Q(zeta). Returns (status, solution)."""
    m = len(rows[0]) if rows else 0
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(m):
        p = next((k for k in range(r, len(A)) if A[k][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [v * inv for v in A[r]]
        for k in range(len(A)):
            if k != r and A[k][c]:
                f = A[k][c]
                A[k] = [a - f * b for a, b in zip(A[k], A[r])]
        piv_cols.append(c)
        r += 1
        if r == len(A):
            break
    for k in range(r, len(A)):
        if A[k][m]:
            return "no-solution", None
    if r < m:
        return "underdetermined", None
    sol = [None] * m
    for k, c in enumerate(piv_cols):
        sol[c] = A[k][m]
    return "ok", sol


def ring_fit(target, basis, names=None, margin=5, fit_order=None):
    """Write ``target`` as a constant linear combination of ``basis``.

    The linear system uses the coefficients of q^0..q^fit_order; the
    solution is then checked against every coefficient up to the common
    truncation, which must exceed fit_order by at least ``margin``.
    """
    names = names or [f"b{k}" for k in range(len(basis))]
    n = min([target.N] + [b.N for b in basis])
    if fit_order is None:
        fit_order = n - margin
    if fit_order + margin > n or fit_order + 1 < len(basis):
        return FitResult("insufficient-order", names=names, fit_order=fit_order, check_order=n)
    order = target.order
    for b in basis:
        if b.order != order:
            raise ValueError("basis and target must share the cyclotomic order")
    rows = [[b[d] for b in basis] for d in range(fit_order + 1)]
    rhs = [target[d] for d in range(fit_order + 1)]
    status, sol = _solve_exact(rows, rhs, order)
    if status != "ok":
        return FitResult(status, names=names, fit_order=fit_order, check_order=n)
    combo = target.truncate((n, 0)) * 0
    for c, b in zip(sol, basis):
        if c:
            combo = combo + b.truncate((n, 0)) * c
    diff = target.truncate((n, 0)) - combo
    if not diff.is_zero():
        return FitResult("validation-failed", sol, names, fit_order, n, diff.first_nonzero())
    return FitResult("ok", sol, names, fit_order, n)


def laurent_basis(L, lo, hi, prefix="L"):
    """L^lo .. L^hi with names."""
    out, names = [], []
    inv = L.invert()
    for m in range(lo, hi + 1):
        out.append(L ** m if m >= 0 else inv ** (-m))
        names.append(f"{prefix}^{m}")
    return out, names


def adaptive_laurent_fit(target, L, cap=12, margin=5, start=None):
    """Fit in Laurent monomials of L, growing |m| <= bound until success.

    The starting bound is 3 + (target order)/3, clipped so that the
    number of unknowns leaves ``margin`` orders for re-validation.
    """
    n = target.N
    bound = start if start is not None else 3 + n // 3
    last = None
    while True:
        size = 2 * bound + 1
        if size + margin > n + 1:
            bound = max(0, (n + 1 - margin - 1) // 2)
            size = 2 * bound + 1
        basis, names = laurent_basis(L, -bound, bound)
        res = ring_fit(target, basis, names, margin)
        if res.ok:
            return res
        last = res
        if bound >= cap or 2 * (bound + 1) + 1 + margin > n + 1:
            return last
        bound += 1

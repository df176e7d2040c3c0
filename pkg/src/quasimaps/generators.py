"""
Generator series of the elliptic, K3 and local rings, Eisenstein series,
the mirror map, and the identities tying them together.

Everything here is a univariate series in q (or Q after the mirror map)
with rational coefficients, stored in Q(zeta_1) unless a caller embeds.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, factorial

from .series import UniSeries, reversion, substitute

__all__ = [
    "GeneratorSet",
    "ModularSet",
    "elliptic_generators",
    "k3_generators",
    "local_generators",
    "bernoulli",
    "eisenstein",
    "eisenstein_and_delta",
    "mirror_map",
    "elliptic_period_ratio",
    "mirror_transport",
    "quasimodular_sides",
    "verify_quasimodular",
    "verify_d_closure",
    "genus1_rhs",
    "identity_report",
]


@dataclass
class GeneratorSet:
    kind: str
    N: int
    series: dict = dc_field(default_factory=dict)

    def __getitem__(self, name):
        return self.series[name]


@dataclass
class ModularSet:
    N: int
    series: dict = dc_field(default_factory=dict)

    def __getitem__(self, name):
        return self.series[name]


def _binomial_power(c, alpha, n):
    """(1 + c q)^alpha through q^n."""
    return (1 + UniSeries.variable(n) * c).power(Fraction(alpha))


def _d_closure_tail(B, n):
    X = B.euler(1) * (1 + B).invert()
    return UniSeries._make(X.field, n, X.c, "q")


def elliptic_generators(n):
    """L, I1E, B1', X for the elliptic ring, through q^n."""
    L = _binomial_power(-27, Fraction(-1, 3), n)
    I1 = UniSeries.from_function(
        lambda d: Fraction(3 * factorial(3 * d - 1), factorial(d) ** 3) if d else 0, n)
    B1 = I1.euler(1)
    X = _d_closure_tail(B1, n)
    return GeneratorSet("elliptic", n, {"L": L, "I1E": I1, "B1p": B1, "X": X})


def k3_generators(n):
    """L, I1K3, A1', X for the K3 ring, through q^n."""
    L = _binomial_power(-256, Fraction(-1, 4), n)

    def base(d):
        return Fraction(factorial(4 * d), factorial(d) ** 4)

    num = UniSeries.from_function(
        lambda d: 4 * base(d) * sum(Fraction(1, r) for r in range(d + 1, 4 * d + 1)), n)
    den = UniSeries.from_function(base, n)
    I1 = num * den.invert()
    A1 = I1.euler(1)
    X = _d_closure_tail(A1, n)
    return GeneratorSet("k3", n, {"L": L, "I1K3": I1, "A1p": A1, "X": X})


def local_generators(n):
    """X = (1 - 8q)^(-1/2) for local P1xP1."""
    return GeneratorSet("local", n, {"X": _binomial_power(-8, Fraction(-1, 2), n)})


# ---------------------------------------------------------------------------
# modular side


def bernoulli(k):
    """B_k with B_1 = -1/2, by the standard recurrence."""
    B = [Fraction(1)]
    for m in range(1, k + 1):
        B.append(-sum(comb(m + 1, j) * B[j] for j in range(m)) / (m + 1))
    return B[k]


def eisenstein(k, n):
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(m) Q^m."""
    c = -Fraction(2 * k) / bernoulli(k)

    def coeff(m):
        if m == 0:
            return 1
        return c * sum(d ** (k - 1) for d in range(1, m + 1) if m % d == 0)

    return UniSeries.from_function(coeff, n, var="Q")


def eisenstein_and_delta(n):
    Q = UniSeries.variable(n, var="Q")
    prod = UniSeries.one(n, var="Q")
    for m in range(1, n + 1):
        prod = prod * (1 - Q ** m)
    delta = Q * prod ** 24
    return ModularSet(n, {"E2": eisenstein(2, n), "E4": eisenstein(4, n),
                          "E6": eisenstein(6, n), "Delta": delta})


def mirror_map(I1):
    """Q = q exp(I1(q))."""
    q = UniSeries.variable(I1.N)
    return q * I1.exp()


def elliptic_period_ratio(n):
    """w1/w0 for the cubic pencil, the H/z-coefficient ratio of its I-function.

    w0 = sum (3d)!/(d!)^3 q^d (equal to 1 + B1'),
    w1 = 3 sum (3d)!/(d!)^3 (H_3d - H_d) q^d.
    """
    def base(d):
        return Fraction(factorial(3 * d), factorial(d) ** 3)

    w0 = UniSeries.from_function(base, n)
    w1 = UniSeries.from_function(
        lambda d: 3 * base(d) * sum(Fraction(1, r) for r in range(d + 1, 3 * d + 1)), n)
    return w1 * w0.invert()


def mirror_transport(a, mirror):
    """a(q(Q)) where q(Q) is the compositional inverse of ``mirror``."""
    inv = reversion(mirror)
    out = substitute(a, inv)
    return UniSeries._make(out.field, out.N, out.c, "Q")


# ---------------------------------------------------------------------------
# identities and reports


def identity_report(ident, lhs, rhs, orders):
    """Exact comparison record: {id, orders, status, first_mismatch}."""
    diff = lhs - rhs
    rec = {"id": ident, "orders": list(orders) if isinstance(orders, tuple) else orders}
    if diff.is_zero():
        rec["status"] = "pass"
        rec["first_mismatch"] = None
    else:
        d = diff.first_nonzero()
        rec["status"] = "fail"
        rec["first_mismatch"] = {"exp": list(d), "difference": diff[d].to_literal()}
    return rec


def quasimodular_sides(n, mirror="period-ratio"):
    """The three quasimodularity identities as (name, transported lhs, E_k).

    ``mirror="period-ratio"`` uses Q = q exp(w1/w0); ``"printed"`` uses
    Q = q exp(I1E) with the factorial series of ``elliptic_generators``.
    Only the former makes the identities hold beyond Q^1.
    """
    g = elliptic_generators(n)
    L, B, X = g["L"], g["B1p"], g["X"]
    L3 = L ** 3
    L3inv = L3.invert()
    f = 1 + B
    lhs = {
        "E2": f ** 2 * L3inv * (12 * X + 4 - 3 * L3),
        "E4": f ** 4 * L3inv ** 2 * (-8 * L3 + 9 * L3 ** 2),
        "E6": f ** 6 * L3inv ** 3 * (-8 * L3 + 36 * L3 ** 2 - 27 * L3 ** 3),
    }
    if mirror == "period-ratio":
        Qmap = mirror_map(elliptic_period_ratio(n))
    elif mirror == "printed":
        Qmap = mirror_map(g["I1E"])
    else:
        raise ValueError(f"unknown mirror map {mirror!r}")
    mod = eisenstein_and_delta(n)
    return [(k, mirror_transport(v, Qmap), mod[k]) for k, v in lhs.items()]


def verify_quasimodular(n=8, mirror="period-ratio"):
    tag = "quasimodular" if mirror == "period-ratio" else f"quasimodular[{mirror}]"
    return [identity_report(f"{tag}:{k}", lhs, rhs, [n]) for k, lhs, rhs in quasimodular_sides(n, mirror)]


def verify_d_closure(n=12):
    out = []
    e = elliptic_generators(n)
    L, X = e["L"], e["X"]
    L3 = L ** 3
    out.append(identity_report("qef:DL", L.euler(1), L * (L3 - 1) * Fraction(1, 3), [n]))
    out.append(identity_report(
        "qef:X", X * X - (L3 - 1) * X + X.euler(1) - (L3 - 1) * Fraction(2, 9), L.zero_like(), [n]))
    k = k3_generators(n)
    L, X = k["L"], k["X"]
    L4 = L ** 4
    out.append(identity_report("qkf:DL", L.euler(1), L * (L4 - 1) * Fraction(1, 4), [n]))
    out.append(identity_report(
        "qkf:X", X * X - 2 * X.euler(1) + (12 * L4 * L4 - 11 * L4 - 1) * Fraction(1, 16),
        L.zero_like(), [n]))
    loc = local_generators(n)["X"]
    q = UniSeries.variable(n)
    out.append(identity_report("local:DX", loc.euler(1), 4 * q * loc ** 3, [n]))
    return out


def genus1_rhs(preset, n=10):
    """The printed genus-1 right-hand side for a twisted preset, as a q1-series."""
    name = getattr(preset, "name", preset)
    if name == "e-surface-32":
        X = elliptic_generators(n)["X"]
        return -X
    if name == "e-3fold-33":
        g = elliptic_generators(n)
        return -(g["L"] ** 3 - 1) * Fraction(1, 4) - g["X"] * Fraction(3, 2)
    if name == "k3-fib-42":
        g = k3_generators(n)
        return (1 - g["L"] ** 4) * Fraction(13, 12) + 2 * g["X"]
    raise ValueError(f"no genus-1 expression for {name!r}")

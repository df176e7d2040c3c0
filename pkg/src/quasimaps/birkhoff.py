"""
Birkhoff factorization: S-operators from derivatives of the I-function.

For every basis monomial gamma = H1^a H2^b the S-operator S(gamma) is the
unique combination of M-derivatives of I with q-series coefficients
whose non-negative z part is exactly gamma:

    S(gamma) = gamma + O(1/z).

They are built one total degree at a time.  For gamma at degree t we
take T(gamma) = M_a S(gamma / H_a) (peeling H1 when possible).  Its z^0
part is gamma' + D_a(c_{-1}) in the monomial basis; the components along
lower-degree monomials are removed with the S-operators already built,
and the square same-degree block C_t = 1 + O(q) is inverted.

For the twisted presets the z^0 part of I is I_0(q) * 1 with
I_0 = sum (t.d)! / prod d_a!^(n_a + 1) q^d, so S(1) = I / I_0.
"""

from __future__ import annotations

from .ifunction import small_i_function, WindowError
from .series import BiSeries

__all__ = [
    "SOperators",
    "BirkhoffError",
    "s_operators",
    "basis_order",
    "s_coefficient_tables",
    "unitriangularity_defects",
    "TABLE_LAYOUTS",
    "jkm_series",
    "e_series_local",
    "closed_form_s_operators",
]


class BirkhoffError(ArithmeticError):
    pass


def basis_order(ring):
    """Basis monomials sorted by total degree, then lexicographically."""
    return sorted(ring.basis, key=lambda m: (m[0] + m[1], m))


class SOperators:
    """S(gamma) for every basis monomial, with the I-function they came from."""

    def __init__(self, g, I, S, normalizer, steps):
        self.geometry = g
        self.I = I
        self.S = S
        self.normalizer = normalizer
        self.steps = steps

    def __getitem__(self, mono):
        return self.S[tuple(mono)]

    def z_part(self, mono, m):
        """Coefficient of z^m of S(mono), monomial basis."""
        return self.S[tuple(mono)].z_coefficient(m)


def _matinv(M):
    """Inverse of a square matrix of BiSeries with invertible diagonal at q=0."""
    n = len(M)
    A = [list(row) for row in M]
    one = A[0][0].one_like()
    zero = A[0][0].zero_like()
    B = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if not A[r][c].constant_term().is_zero()), None)
        if p is None:
            raise BirkhoffError("singular degree block in Birkhoff factorization")
        A[c], A[p] = A[p], A[c]
        B[c], B[p] = B[p], B[c]
        inv = A[c][c].invert()
        A[c] = [x * inv for x in A[c]]
        B[c] = [x * inv for x in B[c]]
        for r in range(n):
            if r != c and not A[r][c].is_zero():
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
                B[r] = [x - f * y for x, y in zip(B[r], B[c])]
    return B


def s_operators(g, trunc, extra_depth=1, I=None):
    """S(gamma) for all basis monomials of ``g``.

    The I-function is expanded deep enough in 1/z that every S(gamma)
    is known down to z^(-extra_depth).
    """
    ring = g.ring()
    order = basis_order(ring)
    top = max(a + b for a, b in ring.basis)
    if I is None:
        I = small_i_function(g, trunc, (-(top + extra_depth), top + 2))
    if I.hi > 0:
        raise BirkhoffError("I-function has positive z powers")
    idx = {m: k for k, m in enumerate(ring.basis)}
    c0 = I.z_coefficient(0)
    I0 = c0[idx[(0, 0)]]
    for m, s in zip(ring.basis, c0):
        if m != (0, 0) and not s.is_zero():
            raise BirkhoffError("z^0 part of the I-function is not a multiple of 1")
    S = {(0, 0): I * I0.invert() if I0 != 1 else I}
    steps = {(0, 0): {"normalizer": "I0"}}
    levels = {}
    for m in order:
        levels.setdefault(m[0] + m[1], []).append(m)
    for t in range(1, top + 1):
        block = levels.get(t, [])
        T = {}
        for gam in block:
            a = 1 if gam[0] > 0 else 2
            prev = (gam[0] - 1, gam[1]) if a == 1 else (gam[0], gam[1] - 1)
            T[gam] = S[prev].M(a)
            steps[gam] = {"from": prev, "axis": a}
        # z^0 components of each candidate
        comps = {gam: T[gam].z_coefficient(0) for gam in block}
        for gam in block:
            if T[gam].hi > 0:
                for m in range(1, T[gam].hi + 1):
                    if any(not s.is_zero() for s in T[gam].z_coefficient(m)):
                        raise BirkhoffError(f"positive z power in M-derivative for {gam}")
        U = {}
        for gam in block:
            u = T[gam]
            for beta in ring.basis:
                deg = beta[0] + beta[1]
                coef = comps[gam][idx[beta]]
                if coef.is_zero():
                    continue
                if deg > t:
                    raise BirkhoffError(f"higher-degree component {beta} in candidate for {gam}")
                if deg < t:
                    u = u - S[beta] * coef
            U[gam] = u.restrict_lo(u.lo) if u.hi <= 0 else _drop_positive(u)
        C = [[comps[gam][idx[beta]] for beta in block] for gam in block]
        Cinv = _matinv(C)
        for r, gam in enumerate(block):
            acc = None
            for k, beta in enumerate(block):
                if Cinv[r][k].is_zero():
                    continue
                term = U[beta] * Cinv[r][k]
                acc = term if acc is None else acc + term
            S[gam] = acc
            steps[gam]["block"] = [[str(b) for b in block]]
    return SOperators(g, I, S, I0, steps)


def _drop_positive(u):
    lo, hi = u.lo, 0
    return u.copy_with(lo, hi, {m: v for m, v in u.data.items() if m <= 0})


def unitriangularity_defects(sops):
    """Monomials gamma whose S(gamma) fails z^0-part == gamma or has z^(>0) terms."""
    ring = sops.geometry.ring()
    bad = []
    for gam, s in sops.S.items():
        c0 = s.z_coefficient(0)
        for beta, ser in zip(ring.basis, c0):
            want = 1 if beta == gam else 0
            if not (ser - want).is_zero():
                bad.append((gam, "z^0", beta, (ser - want).first_nonzero()))
        for m in range(1, s.hi + 1):
            for beta, ser in zip(ring.basis, s.z_coefficient(m)):
                if not ser.is_zero():
                    bad.append((gam, f"z^{m}", beta, ser.first_nonzero()))
    return bad


def _layout(spec):
    out = {}
    for gam, entries in spec.items():
        out[gam] = [(name, mono) for name, mono in entries]
    return out


# Printed names of the 1/z coefficients, per preset: gamma -> [(name, monomial)].
# In the surface layout S(H1^2 H2) prints G3 against H1^3, which equals 1 in
# the specialized ring and would collide with G5; H1^2 is used instead.
TABLE_LAYOUTS = {
    "e-surface-32": _layout({
        (0, 0): [("A1", (1, 0)), ("A2", (0, 1))],
        (1, 0): [("B1", (2, 0)), ("B2", (1, 1)), ("B3", (0, 0))],
        (0, 1): [("C1", (2, 0)), ("C2", (1, 1)), ("C3", (0, 0))],
        (2, 0): [("E1", (0, 0)), ("E2", (2, 1)), ("E3", (1, 0)), ("E4", (0, 1))],
        (1, 1): [("F1", (0, 0)), ("F2", (2, 1)), ("F3", (1, 0)), ("F4", (0, 1))],
        (2, 1): [("G1", (1, 0)), ("G2", (0, 1)), ("G3", (2, 0)), ("G4", (1, 1)), ("G5", (0, 0))],
    }),
    "e-3fold-33": _layout({
        (0, 0): [("A1", (1, 0)), ("A2", (0, 1))],
        (1, 0): [("B1", (2, 0)), ("B2", (1, 1)), ("B3", (0, 2))],
        (0, 1): [("C1", (2, 0)), ("C2", (1, 1)), ("C3", (0, 2))],
        (2, 0): [("E1", (0, 0)), ("E2", (2, 1)), ("E3", (1, 2))],
        (1, 1): [("F1", (0, 0)), ("F2", (2, 1)), ("F3", (1, 2))],
        (0, 2): [("G1", (0, 0)), ("G2", (2, 1)), ("G3", (1, 2))],
        (2, 1): [("H1", (1, 0)), ("H2", (0, 1)), ("H3", (2, 2))],
        (1, 2): [("I1", (1, 0)), ("I2", (0, 1)), ("I3", (2, 2))],
        (2, 2): [("J1", (2, 0)), ("J2", (1, 1)), ("J3", (0, 2))],
    }),
    "k3-fib-42": _layout({
        (0, 0): [("A1", (1, 0)), ("A2", (0, 1))],
        (1, 0): [("B1", (2, 0)), ("B2", (1, 1)), ("B3", (0, 0))],
        (0, 1): [("C1", (2, 0)), ("C2", (1, 1)), ("C3", (0, 0))],
        (2, 0): [("E1", (3, 0)), ("E2", (2, 1)), ("E3", (1, 0)), ("E4", (0, 1))],
        (1, 1): [("F1", (3, 0)), ("F2", (2, 1)), ("F3", (1, 0)), ("F4", (0, 1))],
        (3, 0): [("G1", (0, 0)), ("G2", (3, 1)), ("G3", (2, 0)), ("G4", (1, 1))],
        (2, 1): [("H1", (0, 0)), ("H2", (3, 1)), ("H3", (2, 0)), ("H4", (1, 1))],
        (3, 1): [("I1", (1, 0)), ("I2", (0, 1)), ("I3", (3, 0)), ("I4", (2, 1))],
    }),
}


def s_coefficient_tables(sops, layout=None):
    """Named 1/z coefficients of the S-operators.

    ``layout`` maps gamma to a list of (name, monomial); a printed
    monomial outside the basis is reduced by the ring relations.  Returns
    (table, residue): residue holds every (gamma, monomial) component of
    the 1/z coefficient not accounted for by the layout.
    """
    g = sops.geometry
    ring = g.ring()
    layout = layout if layout is not None else TABLE_LAYOUTS.get(g.name)
    table, residue = {}, {}
    for gam in basis_order(ring):
        comps = sops.z_part(gam, -1)
        if layout is None or gam not in layout:
            for beta, s in zip(ring.basis, comps):
                table[f"S({gam[0]},{gam[1]})[{beta[0]},{beta[1]}]"] = s
            continue
        # express the printed monomials in the basis and solve for the names
        entries = layout[gam]
        vecs = []
        for name, (a, b) in entries:
            cls = ring.monomial(a, b)
            vecs.append(cls.coeffs)
        # solve sum_k name_k vecs[k] = comps (least-squares free: pick pivot rows)
        sol, rest = _express(vecs, comps, ring)
        for (name, _), s in zip(entries, sol):
            table[name] = s
        for beta, s in zip(ring.basis, rest):
            if not s.is_zero():
                residue[f"S({gam[0]},{gam[1]})[{beta[0]},{beta[1]}]"] = s
    return table, residue


def _express(vecs, comps, ring):
    """Solve sum_k x_k vecs[k] = comps for series x_k over constant vectors.

    Returns (solutions, remainder); the remainder collects components that
    the printed monomials cannot account for.
    """
    n = len(ring.basis)
    k = len(vecs)
    rows = [[vecs[j][i] for j in range(k)] for i in range(n)]
    rhs = list(comps)
    # Gaussian elimination on the constant matrix, applied to series rhs
    piv_cols = []
    r = 0
    A = [list(row) for row in rows]
    b = list(rhs)
    for c in range(k):
        p = next((i for i in range(r, n) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        b[r], b[p] = b[p], b[r]
        inv = A[r][c].inverse()
        A[r] = [v * inv for v in A[r]]
        b[r] = b[r] * inv
        for i in range(n):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
                b[i] = b[i] - b[r] * f
        piv_cols.append(c)
        r += 1
    zero = comps[0].zero_like()
    sol = [zero] * k
    for i, c in enumerate(piv_cols):
        sol[c] = b[i]
    # remainder: comps minus the reconstructed combination
    rest = list(comps)
    for j in range(k):
        if not sol[j].is_zero():
            rest = [x - sol[j] * vecs[j][i] if vecs[j][i] else x for i, x in enumerate(rest)]
    return sol, rest


# ---------------------------------------------------------------------------
# closed-form series for local P1 x P1


def _with_derivatives(names, series, env, marks=("p", "b")):
    for n in names:
        s = series[n]
        env[n] = s
        if "p" in marks:
            env[n + "p"] = s.euler(1)
        if "b" in marks:
            env[n + "b"] = s.euler(2)
    return env


def jkm_series(g, trunc, table=None):
    """J, K, reduced JJ/KK and MM series from the 1/z^3-deep I-table.

    The reduction uses s1 = beta0 + beta1 and s2 = beta0 * beta1 of the
    preset (0 and 1 under the standard specialisation).
    """
    from .formulas import J_SERIES, K_SERIES, REDUCED, M_SERIES, evaluate
    from .ifunction import i_coefficient_table
    if not g.local:
        raise ValueError("J/K/M series are defined for the local preset only")
    if table is None:
        table, _ = i_coefficient_table(g, trunc, 3)
    env = _with_derivatives(sorted(table), table, {})
    env["Delta"] = 1 + env["I11p"] - env["I11b"] * env["I12p"] + env["I12b"] + env["I11p"] * env["I12b"]
    b0, b1 = g.weights2
    env["s1"], env["s2"] = b0 + b1, b0 * b1
    out = dict(table)
    for name, expr in list(J_SERIES.items()) + list(K_SERIES.items()):
        out[name] = evaluate(expr, env)
    scope = dict(env)
    scope.update({k: v for k, v in out.items() if k[0] in "JK"})
    for name, expr in REDUCED.items():
        out[name] = evaluate(expr, scope)
    jk = [k for k in out if k[0] in "JK"]
    _with_derivatives(jk, out, scope)
    for name, expr in M_SERIES.items():
        out[name] = evaluate(expr, scope)
    out["Delta"] = env["Delta"]
    return out


def e_series_local(tables):
    """E11 .. E32 from the I-table and the reduced K series."""
    from .formulas import E_SERIES, evaluate
    env = _with_derivatives(["I11", "I12", "KK11", "KK14"], tables, {})
    return {name: evaluate(expr, env) for name, expr in E_SERIES.items()}


def closed_form_s_operators(g, trunc, tables=None, I=None):
    """S(1), S(H1), S(H2), S(H1H2) via the printed E-series route."""
    if tables is None:
        tables = jkm_series(g, trunc)
    E = e_series_local(tables)
    if I is None:
        I = small_i_function(g, trunc, (-3, 4))
    S1 = I
    M1, M2 = S1.M(1), S1.M(2)
    S = {(0, 0): S1,
         (1, 0): M1 * E["E11"] + M2 * E["E12"],
         (0, 1): M1 * E["E21"] + M2 * E["E22"]}
    S[(1, 1)] = S[(0, 1)].M(1) * E["E31"] + S1 * E["E32"]
    return S, E

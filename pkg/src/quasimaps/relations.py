"""
Verification suites for the closed-form relations and ring-membership fits.

Every check is an exact zero test on truncated series.  A suite returns a
list of records

    {"id": ..., "orders": [...], "status": "pass" | "fail", "first_mismatch": ...}

sorted by id, so that reports are byte-stable.  Fits add a "fit" entry
with the exact coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .asymptotics import (adaptive_laurent_fit, closed_form_L_local, ring_fit,
                          solve_asymptotics, solve_leading)
from .birkhoff import (basis_order, closed_form_s_operators, jkm_series,
                       s_coefficient_tables, s_operators, unitriangularity_defects)
from .formulas import (K3_QUADRATIC, K3_QUADRATIC_L4, MG_CLOSED_FORMS, RELATION_RE,
                       TABLE_32, TABLE_33, TABLE_42, evaluate)
from .generators import identity_report
from .geometry import LOCAL_P1P1, PRESETS, get_preset
from .ifunction import i_coefficient_table, small_i_function
from .picard_fuchs import pf_operators
from .series import UniSeries

__all__ = [
    "verify_pf_annihilation",
    "verify_integrability",
    "verify_local_leading",
    "verify_root_symmetry",
    "verify_mg_closed_forms",
    "verify_relation_re",
    "verify_vanishing_jkm",
    "verify_birkhoff_unitriangular",
    "verify_table",
    "verify_k3_quadratic",
    "verify_fg2",
    "fit_local_slices",
    "fit_laurent_slices",
    "g_basis",
    "r_basis",
    "table_environment",
    "status_record",
]

TABLES = {"e-surface-32": TABLE_32, "e-3fold-33": TABLE_33, "k3-fib-42": TABLE_42}


def status_record(ident, ok, orders, mismatch=None, **extra):
    rec = {"id": ident, "orders": list(orders), "status": "pass" if ok else "fail",
           "first_mismatch": None if ok else mismatch}
    rec.update(extra)
    return rec


def _zero_record(ident, series, orders):
    return identity_report(ident, series, series.zero_like(), orders)


def _pt(p):
    return f"{p[0]}{p[1]}"


# ---------------------------------------------------------------------------
# cached building blocks


@lru_cache(maxsize=None)
def _jkm(trunc):
    return jkm_series(LOCAL_P1P1, trunc)


@lru_cache(maxsize=None)
def _leading(name, point, trunc):
    return solve_leading(get_preset(name), point, trunc)


@lru_cache(maxsize=None)
def _asymptotics(name, point, trunc, K):
    return solve_asymptotics(get_preset(name), point, trunc, K, check=False)


@lru_cache(maxsize=None)
def _sops(name, trunc):
    return s_operators(get_preset(name), trunc)


# ---------------------------------------------------------------------------
# basic structural checks


def verify_pf_annihilation(trunc=(8, 4), presets=None):
    out = []
    for name in presets or PRESETS:
        g = get_preset(name)
        I = small_i_function(g, trunc, (-3, 8))
        for op in pf_operators(g):
            r = op.apply(I)
            bad = r.first_nonzero()
            out.append(status_record(f"pf:{op.name}", bad is None, trunc,
                                     None if bad is None else {"z": bad[0], "point": list(bad[1]),
                                                               "exp": list(bad[2])}))
    return out


def verify_integrability(trunc=(6, 3), presets=None):
    """D2 L = D1 UD at every fixed point."""
    out = []
    for name in presets or PRESETS:
        g = get_preset(name)
        for p in g.ring().fixed_points:
            L, UD = _leading(name, tuple(p), trunc)
            out.append(identity_report(f"integrability:{name}:{_pt(p)}", L.euler(2), UD.euler(1), trunc))
    return out


def verify_local_leading(n=12):
    """Solved q2^0 slice of the local L against the closed form."""
    g = LOCAL_P1P1
    out = []
    for p in g.ring().fixed_points:
        L, _ = _leading(g.name, tuple(p), (n, 0))
        out.append(identity_report(f"local-L:{_pt(p)}", L.slice(0), closed_form_L_local(g, p, n), [n]))
    return out


def verify_root_symmetry(n=12):
    """L_0i, L_1i are the two roots of L^2 - (-1)^i 8 sqrt(-1) q/(1-4q) L - 1."""
    g = LOCAL_P1P1
    q = UniSeries.variable(n, g.order)
    i_unit = g.weights2[0]
    out = []
    for j in (0, 1):
        a = closed_form_L_local(g, (0, j), n)
        b = closed_form_L_local(g, (1, j), n)
        s = q * (8 * (-1) ** j) * i_unit * (1 - 4 * q).invert()
        out.append(identity_report(f"root-symmetry:product:{j}", a * b, -a.one_like(), [n]))
        out.append(identity_report(f"root-symmetry:sum:{j}", a + b, s, [n]))
    return out


# ---------------------------------------------------------------------------
# local P1 x P1 relations


def _local_env(trunc, point):
    T = _jkm(trunc)
    L, UD = _leading(LOCAL_P1P1.name, point, trunc)
    I11 = T["I11"]
    env = {"L": L, "UD": UD, "I11p": I11.euler(1), "I11b": I11.euler(2)}
    env["I11pb"] = env["I11p"].euler(2)
    env["I11bb"] = env["I11b"].euler(2)
    return T, env


def _lhs(T, key):
    base, mark = key[:-1], key[-1]
    return T[base].euler(1 if mark == "p" else 2)


def verify_mg_closed_forms(trunc=(5, 3), points=((0, 0), (1, 1))):
    out = []
    for p in points:
        T, env = _local_env(trunc, tuple(p))
        for key, expr in MG_CLOSED_FORMS.items():
            out.append(identity_report(f"mg-closed:{key}:{_pt(p)}", _lhs(T, key), evaluate(expr, env), trunc))
    return out


def verify_relation_re(trunc=(5, 3), points=((0, 0), (1, 1))):
    out = []
    for p in points:
        _, env = _local_env(trunc, tuple(p))
        out.append(_zero_record(f"relation-re:{_pt(p)}", evaluate(RELATION_RE, env), trunc))
    return out


def verify_vanishing_jkm(trunc=(6, 3)):
    """The printed vanishing list, plus MM14 which vanishes in its place."""
    T = _jkm(trunc)
    out = [_zero_record(f"vanishing:{n}", T[n], trunc)
           for n in ("JJ12", "JJ13", "KK12", "KK13", "MM11", "MM12")]
    out.append(dict(_zero_record("vanishing-observed:MM14", T["MM14"], trunc)))
    return out


def verify_birkhoff_unitriangular(trunc=(6, 3), presets=None):
    out = []
    for name in presets or PRESETS:
        sops = _sops(name, trunc)
        bad = unitriangularity_defects(sops)
        mm = None
        if bad:
            gam, where, beta, d = bad[0]
            mm = {"gamma": list(gam), "z": where, "component": list(beta), "exp": list(d)}
        out.append(status_record(f"birkhoff:{name}", not bad, trunc, mm))
    g = LOCAL_P1P1
    S, _ = closed_form_s_operators(g, trunc, _jkm(trunc))
    sops = _sops(g.name, trunc)
    for gam in basis_order(g.ring()):
        d = S[gam] - sops[gam]
        bad = d.first_nonzero()
        out.append(status_record(
            f"birkhoff-closed-form:S({gam[0]},{gam[1]})", bad is None, trunc,
            None if bad is None else {"z": bad[0], "point": list(bad[1]), "exp": list(bad[2])}))
    return out


# ---------------------------------------------------------------------------
# twisted tables


def table_environment(name, n, point=(0, 0)):
    """q2^0 slices X of the printed table entries, their D1 derivatives Xp, and L."""
    sops = _sops(name, (n, 0))
    tab, residue = s_coefficient_tables(sops)
    L, _ = _leading(name, tuple(point), (n, 0))
    env = {"L": L.slice(0)}
    for k, v in tab.items():
        s = v.slice(0)
        env[k] = s
        env[k + "p"] = s.euler(1)
    return env, residue


def verify_table(suite, n=8):
    name = get_preset(suite).name
    env, residue = table_environment(name, n)
    out = [identity_report(f"table:{name}:{k}", env[k], evaluate(expr, env), [n])
           for k, expr in TABLES[name].items()]
    for k, s in residue.items():
        out.append(_zero_record(f"table-residue:{name}:{k}", s, [n]))
    return out


def verify_k3_quadratic(n=8, variants=("printed",)):
    """The quadratic relation among A1', E1' and L_0j, both j.

    "printed" takes the denominator 16+1+... literally (constant 17);
    "quartic" reads it as 16L^4+1+..., which is reported for comparison.
    """
    name = "k3-fib-42"
    env, _ = table_environment(name, n)
    out = []
    exprs = {"printed": K3_QUADRATIC, "quartic": K3_QUADRATIC_L4}
    for j in (0, 1):
        L, _ = _leading(name, (0, j), (n, 0))
        e = dict(env)
        e["L"] = L.slice(0)
        e["sj"] = (-1) ** j
        for v in variants:
            tag = "k3-quadratic" if v == "printed" else f"k3-quadratic[{v}]"
            out.append(_zero_record(f"{tag}:j{j}", evaluate(exprs[v], e), [n]))
    return out


# ---------------------------------------------------------------------------
# ring-membership fits


def _fit_record(ident, res, orders):
    rec = status_record(ident, res.ok, orders, None if res.ok else {
        "reason": res.status, "exp": list(res.mismatch) if res.mismatch else None})
    rec["fit"] = res.to_json_obj()
    return rec


def r_basis(r, beta, M, n):
    """r * {r^(2m): |m| <= M} and r * (1 + beta r^2)^(-k), k = 1..n."""
    r2 = r * r
    r2i = r2.invert()
    w = (1 + r2 * beta).invert()
    basis = [r * r2 ** m for m in range(M + 1)] + [r * r2i ** m for m in range(1, M + 1)]
    names = [f"r^{2 * m + 1}" for m in range(M + 1)] + [f"r^{1 - 2 * m}" for m in range(1, M + 1)]
    basis += [r * w ** k for k in range(1, n + 1)]
    names += [f"r*(1+b*r^2)^-{k}" for k in range(1, n + 1)]
    return basis, names


def _grow(target, make, cap):
    """Fit in make(1), make(2), ... until success or the orders run out."""
    res, basis = None, None
    for s in range(1, cap + 1):
        basis, names = make(s)
        res = ring_fit(target, basis, names)
        if res.ok or res.status == "insufficient-order":
            break
    return res, basis


def verify_fg2(k_max=2, n=30, points=((0, 0),), perturb=7):
    """a_k (q2^k slices of I11) in r C[r^2, r^-2, (1 + beta r^2)^-1]; perturbed control must fail."""
    g = LOCAL_P1P1
    tab, _ = i_coefficient_table(g, (n, k_max), 1)
    out = []
    for p in points:
        i, j = p
        L = closed_form_L_local(g, p, n)
        # sqrt(L_ij) with constant term sqrt(alpha_i); sqrt(-1) = weights2[0]
        r = L.nth_root(2, 1 if g.weights1[i] == 1 else g.weights2[0])
        beta = g.weights2[j]
        for k in range(1, k_max + 1):
            a = tab["I11"].slice(k)
            res, basis = _grow(a, lambda s: r_basis(r, beta, s, s), 8)
            out.append(_fit_record(f"fg2:a{k}:{_pt(p)}", res, [n]))
            if res.ok and perturb is not None:
                bad = ring_fit(a + UniSeries.variable(n, g.order) ** perturb, basis, res.names)
                out.append(status_record(f"fg2-control:a{k}+q^{perturb}:{_pt(p)}", not bad.ok, [n],
                                         None if not bad.ok else {"reason": "perturbed target fitted"}))
    return out


def g_basis(L, u, M, J, odd):
    """Basis of G = C[L, u] split by parity in u: s*L^m (m <= M) and s*u^(2j) (1 <= j <= J), s = u or 1."""
    s = u if odd else L.one_like()
    basis = [L ** m * s for m in range(M + 1)]
    names = [f"{'u*' if odd else ''}L^{m}" for m in range(M + 1)]
    for jj in range(1, J + 1):
        basis.append(s * u ** (2 * jj))
        names.append(f"u^{2 * jj + odd}")
    return basis, names


def fit_local_slices(n=30, point=(0, 0), k_max=2, K=1):
    """L, UD (even in u) and R_0..R_K (odd in u) slices in G = C[L_ij, (1 + beta_j L_ij)^(-1/2)].

    u is normalised to constant term 1: ((1 + beta L)/(1 + beta alpha))^(-1/2).
    """
    g = LOCAL_P1P1
    A = _asymptotics(g.name, tuple(point), (n, k_max), K)
    i, j = point
    L = A.L.slice(0)
    beta = g.weights2[j]
    u = ((1 + L * beta) / (1 + beta * g.weights1[i])).power(Fraction(-1, 2))
    targets = [("L", A.L, 0), ("UD", A.UD, 0)] + [(f"R{m}", A.R[m], 1) for m in range(K + 1)]
    out = []
    for nm, ser, odd in targets:
        for k in range(k_max + 1):
            res, _ = _grow(ser.slice(k), lambda s: g_basis(L, u, s, s, odd), 12)
            out.append(_fit_record(f"local-fits:{nm}:q2^{k}:{_pt(point)}", res, [n]))
    bad = ring_fit(L, [L.one_like()], ["1"])
    out.append(status_record(f"local-fits-control:L-in-constants:{_pt(point)}", not bad.ok, [n]))
    return out


def fit_laurent_slices(name, n=22, k_max=1, K=0, point=(0, 0)):
    """L, UD and R slices of a twisted preset in Laurent polynomials of L_00."""
    A = _asymptotics(get_preset(name).name, tuple(point), (n, k_max), K)
    L = A.L.slice(0)
    targets = [("L", A.L), ("UD", A.UD)] + [(f"R{m}", A.R[m]) for m in range(K + 1)]
    out = []
    for nm, ser in targets:
        for k in range(k_max + 1):
            if nm == "L" and k == 0:
                continue
            res = adaptive_laurent_fit(ser.slice(k), L)
            out.append(_fit_record(f"laurent:{name}:{nm}:q2^{k}:{_pt(point)}", res, [n]))
    return out

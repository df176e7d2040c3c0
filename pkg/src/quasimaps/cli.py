"""
Command line: build series, run verification suites, run ring fits, export tables.

    quasimaps series elliptic-generators --order 12
    quasimaps series local-L --fixed-point 0,0 --order 12
    quasimaps verify all --profile quick --output report.json
    quasimaps fit R0 --basis G --slice 1
    quasimaps export e-surface-32 --trunc 8,0

Exit codes: 0 pass, 1 verification or fit failure, 2 usage error,
3 compute error.  Settings come from an optional key=value file given
with --config; command-line flags override it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import generators as gen
from . import relations as rel
from .asymptotics import adaptive_laurent_fit, closed_form_L_local, ring_fit
from .geometry import LOCAL_P1P1, PRESETS, get_preset
from .series import UniSeries, series_from_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# configuration

CONFIG_KEYS = {"preset", "order", "trunc", "fixed-point", "z-depth", "k", "profile",
               "format", "output", "slice", "basis", "fixture"}


def read_config(path):
    """key=value lines; '#' starts a comment."""
    out = {}
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}")
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.lower().replace("_", "-")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{n}: unknown key {key!r}")
        out[key] = val
    return out


def _pair(text, what):
    try:
        a, b = (int(x) for x in str(text).split(","))
    except ValueError:
        raise UsageError(f"{what} must look like 'a,b', got {text!r}")
    return a, b


def _positive(value, what):
    try:
        v = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"{what} must be an integer, got {value!r}")
    if v <= 0:
        raise UsageError(f"{what} must be positive")
    return v


def resolve(args):
    """Merge the config file (if any) with the flags; flags win."""
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    for key in CONFIG_KEYS:
        attr = key.replace("-", "_")
        v = getattr(args, attr, None)
        if v is not None:
            cfg[key] = v
    out = {}
    if "preset" in cfg:
        try:
            out["preset"] = get_preset(str(cfg["preset"])).name
        except KeyError as exc:
            raise UsageError(str(exc.args[0]))
    if "order" in cfg:
        out["order"] = _positive(cfg["order"], "order")
    if "trunc" in cfg:
        t = _pair(cfg["trunc"], "trunc")
        if t[0] <= 0 or t[1] < 0:
            raise UsageError("trunc needs N1 > 0 and N2 >= 0")
        out["trunc"] = t
    if "fixed-point" in cfg:
        out["fixed-point"] = _pair(cfg["fixed-point"], "fixed-point")
    for key in ("z-depth", "k", "slice"):
        if key in cfg:
            v = int(cfg[key])
            if v < 0:
                raise UsageError(f"{key} must be nonnegative")
            out[key] = v
    fmt = cfg.get("format", "json")
    if fmt not in ("json", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    out["format"] = fmt
    prof = cfg.get("profile", "quick")
    if prof not in PROFILES:
        raise UsageError(f"unknown profile {prof!r}; choose from {sorted(PROFILES)}")
    out["profile"] = prof
    for key in ("output", "basis", "fixture"):
        if key in cfg:
            out[key] = cfg[key]
    return out


# ---------------------------------------------------------------------------
# output


def series_rows(name, s):
    obj = s.to_json_obj()
    return [[name] + [str(e) for e in t["exp"]] + [t["val"]] for t in obj["terms"]]


def render(obj, fmt):
    if fmt == "json":
        return json.dumps(obj, sort_keys=True, indent=1) + "\n"
    lines = []
    if "series" in obj:
        lines.append("name,exponents...,value")
        for name in sorted(obj["series"]):
            s = series_from_json(obj["series"][name])
            lines += [",".join(r) for r in series_rows(name, s)]
    else:
        lines.append("suite,id,status,first_mismatch")
        for suite in sorted(obj["suites"]):
            for r in obj["suites"][suite]:
                mm = "" if r["first_mismatch"] is None else json.dumps(r["first_mismatch"], sort_keys=True)
                lines.append(",".join([suite, r["id"], r["status"], '"' + mm.replace('"', "'") + '"']))
    return "\n".join(lines) + "\n"


def write_out(text, path):
    if not path or path == "-":
        sys.stdout.write(text)
        return
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=os.path.basename(path))
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


# ---------------------------------------------------------------------------
# series


def _series_elliptic(cfg):
    return gen.elliptic_generators(cfg.get("order", 12)).series


def _series_k3(cfg):
    return gen.k3_generators(cfg.get("order", 12)).series


def _series_local(cfg):
    return gen.local_generators(cfg.get("order", 12)).series


def _series_modular(cfg):
    return gen.eisenstein_and_delta(cfg.get("order", 8)).series


def _series_local_L(cfg):
    p = cfg.get("fixed-point", (0, 0))
    _check_point(LOCAL_P1P1, p)
    return {"L": closed_form_L_local(LOCAL_P1P1, p, cfg.get("order", 12))}


def _series_genus1(cfg):
    if "preset" not in cfg:
        raise UsageError("genus1 needs --preset")
    try:
        return {"rhs": gen.genus1_rhs(cfg["preset"], cfg.get("order", 10))}
    except ValueError as exc:
        raise UsageError(str(exc))


def _check_point(g, p):
    if tuple(p) not in [tuple(x) for x in g.ring().fixed_points]:
        raise UsageError(f"{p} is not a fixed point of {g.name}")


def _series_asymptotics(cfg):
    g = get_preset(cfg.get("preset", LOCAL_P1P1.name))
    p = cfg.get("fixed-point", (0, 0))
    _check_point(g, p)
    A = rel._asymptotics(g.name, tuple(p), cfg.get("trunc", (6, 3)), cfg.get("k", 1))
    out = {"L": A.L, "UD": A.UD}
    for n, R in enumerate(A.R):
        out[f"R{n}"] = R
    return out


SERIES = {
    "elliptic-generators": _series_elliptic,
    "k3-generators": _series_k3,
    "local-generators": _series_local,
    "modular": _series_modular,
    "local-L": _series_local_L,
    "genus1": _series_genus1,
    "asymptotics": _series_asymptotics,
}


def _artifact(kind, name, cfg, series):
    keep = {k: (list(v) if isinstance(v, tuple) else v) for k, v in cfg.items()
            if k not in ("output", "format", "fixture")}
    return {"artifact": kind, "name": name, "config": keep,
            "series": {k: v.to_json_obj() for k, v in sorted(series.items())}}


def cmd_series(args, cfg):
    if args.name not in SERIES:
        raise UsageError(f"unknown series {args.name!r}; choose from {sorted(SERIES)}")
    art = _artifact("series", args.name, cfg, SERIES[args.name](cfg))
    write_out(render(art, cfg["format"]), cfg.get("output"))
    return EXIT_OK


# ---------------------------------------------------------------------------
# export


def export_tables(cfg, name):
    g = get_preset(name)
    if g.local:
        tr = cfg.get("trunc", (6, 3))
        T = rel._jkm(tr)
        return {k: v for k, v in T.items()}
    tr = cfg.get("trunc", (8, 0))
    tab, residue = rel.s_coefficient_tables(rel._sops(g.name, tr))
    out = dict(tab)
    out.update({f"residue:{k}": v for k, v in residue.items()})
    return out


def cmd_export(args, cfg):
    try:
        name = get_preset(args.preset).name
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    cfg["preset"] = name
    art = _artifact("tables", name, cfg, export_tables(cfg, name))
    write_out(render(art, cfg["format"]), cfg.get("output"))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

# Per-suite orders.  "quick" uses the acceptance orders; "full" pushes further.
PROFILES = {
    "quick": {"bi": (6, 3), "uni": 8, "modular": 8, "closure": 12, "pf": (8, 4), "mg": (5, 3),
              "fit": 30, "laurent": 22},
    "full": {"bi": (8, 4), "uni": 12, "modular": 12, "closure": 20, "pf": (10, 5), "mg": (6, 4),
             "fit": 40, "laurent": 30},
}


def _suites(cfg):
    P = PROFILES[cfg["profile"]]
    uni = cfg.get("order")
    bi = cfg.get("trunc")
    return {
        "pf-annihilation": lambda: rel.verify_pf_annihilation(bi or P["pf"]),
        "quasimodular": lambda: gen.verify_quasimodular(uni or P["modular"]),
        "d-closure": lambda: gen.verify_d_closure(uni or P["closure"]),
        "mg-closed": lambda: rel.verify_mg_closed_forms(bi or P["mg"]),
        "relation-re": lambda: rel.verify_relation_re(bi or P["mg"]),
        "fg2": lambda: rel.verify_fg2(2, uni or P["fit"]),
        "table-32": lambda: rel.verify_table("e-surface-32", uni or P["uni"]),
        "table-33": lambda: rel.verify_table("e-3fold-33", uni or P["uni"]),
        "table-42": lambda: rel.verify_table("k3-fib-42", uni or P["uni"]),
        "k3-quadratic": lambda: rel.verify_k3_quadratic(uni or P["uni"]),
        "root-symmetry": lambda: rel.verify_root_symmetry(uni or P["closure"]),
        "vanishing-jkm": lambda: rel.verify_vanishing_jkm(bi or P["bi"]),
        "birkhoff-unitriangular": lambda: rel.verify_birkhoff_unitriangular(bi or P["bi"]),
        "integrability": lambda: rel.verify_integrability(bi or P["bi"]),
        "local-leading": lambda: rel.verify_local_leading(uni or P["closure"]),
        "local-fits": lambda: rel.fit_local_slices(uni or P["fit"]),
        "laurent-twisted": lambda: [r for name in ("e-surface-32", "e-3fold-33", "k3-fib-42")
                                    for r in rel.fit_laurent_slices(name, P["laurent"])],
    }


SUITE_NAMES = sorted(_suites({"profile": "quick"}))


def verify_fixture(path):
    """Recompute every series of an artifact and compare exactly."""
    try:
        with open(path) as fh:
            art = json.load(fh)
        cfg = dict(art["config"])
        for k in ("trunc", "fixed-point"):
            if k in cfg:
                cfg[k] = tuple(cfg[k])
        cfg.setdefault("format", "json")
        stored = {k: series_from_json(v) for k, v in art["series"].items()}
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"unreadable fixture {path}: {exc}")
    if art.get("artifact") == "tables":
        fresh = export_tables(cfg, cfg["preset"])
    elif art.get("name") in SERIES:
        fresh = SERIES[art["name"]](cfg)
    else:
        raise UsageError(f"fixture {path} names no known series")
    out = []
    for k in sorted(stored):
        if k not in fresh:
            out.append(rel.status_record(f"fixture:{k}", False, [], {"reason": "unknown series"}))
            continue
        a, b = stored[k], fresh[k]
        if isinstance(a, UniSeries) and not isinstance(b, UniSeries):
            b = b.slice(0)
        out.append(gen.identity_report(f"fixture:{k}", a, b, list(a.trunc)))
    return out


def cmd_verify(args, cfg):
    names = list(args.suites)
    registry = _suites(cfg)
    if "all" in names:
        names = SUITE_NAMES
    results = {}
    for n in names:
        if n == "fixture":
            if "fixture" not in cfg:
                raise UsageError("the fixture suite needs --fixture PATH")
            continue
        if n not in registry:
            raise UsageError(f"unknown suite {n!r}; choose from {SUITE_NAMES + ['all', 'fixture']}")
    for n in names:
        results[n] = verify_fixture(cfg["fixture"]) if n == "fixture" else registry[n]()
        results[n] = sorted(results[n], key=lambda r: r["id"])
    failed = sum(1 for rs in results.values() for r in rs if r["status"] != "pass")
    total = sum(len(rs) for rs in results.values())
    report = {"profile": cfg["profile"], "suites": results,
              "summary": {"checks": total, "failed": failed, "passed": total - failed}}
    write_out(render(report, cfg["format"]), cfg.get("output"))
    for rs in results.values():
        for r in rs:
            if r["status"] != "pass":
                sys.stderr.write(f"FAIL {r['id']}: first mismatch {json.dumps(r['first_mismatch'], sort_keys=True)}\n")
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# fit


def _fit_target(cfg, target):
    k = cfg.get("slice", 0)
    if target in ("a1", "a2", "a3"):
        from .ifunction import i_coefficient_table
        n = cfg.get("order", 30)
        kk = int(target[1])
        tab, _ = i_coefficient_table(LOCAL_P1P1, (n, kk), 1)
        return LOCAL_P1P1, tab["I11"].slice(kk)
    g = get_preset(cfg.get("preset", LOCAL_P1P1.name))
    n = cfg.get("order", 30 if g.local else 22)
    p = cfg.get("fixed-point", (0, 0))
    _check_point(g, p)
    m = int(target[1]) if target[0] == "R" and target[1:].isdigit() else 0
    A = rel._asymptotics(g.name, tuple(p), (n, max(k, 1)), max(m, 1))
    series = {"L": A.L, "UD": A.UD}
    series.update({f"R{i}": R for i, R in enumerate(A.R)})
    if target not in series:
        raise UsageError(f"unknown fit target {target!r}")
    return g, series[target].slice(k)


def cmd_fit(args, cfg):
    from fractions import Fraction
    basis_kind = cfg.get("basis", "laurent")
    g, target = _fit_target(cfg, args.target)
    p = cfg.get("fixed-point", (0, 0))
    n = target.N
    if basis_kind == "one":
        res = ring_fit(target, [target.one_like()], ["1"])
    elif basis_kind == "laurent":
        res = adaptive_laurent_fit(target, rel._leading(g.name, tuple(p), (n, 0))[0].slice(0))
    elif basis_kind == "G":
        if not g.local:
            raise UsageError("the G basis belongs to the local preset")
        L = closed_form_L_local(g, p, n)
        beta = g.weights2[p[1]]
        u = ((1 + L * beta) / (1 + beta * g.weights1[p[0]])).power(Fraction(-1, 2))
        odd = args.target.startswith("R")
        res, _ = rel._grow(target, lambda s: rel.g_basis(L, u, s, s, odd), 12)
    elif basis_kind == "r":
        L = closed_form_L_local(LOCAL_P1P1, p, n)
        r = L.nth_root(2, 1 if LOCAL_P1P1.weights1[p[0]] == 1 else LOCAL_P1P1.weights2[0])
        res, _ = rel._grow(target, lambda s: rel.r_basis(r, LOCAL_P1P1.weights2[p[1]], s, s), 8)
    else:
        raise UsageError(f"unknown basis {basis_kind!r}; choose from G, r, laurent, one")
    art = {"artifact": "fit", "target": args.target, "basis": basis_kind,
           "config": {k: (list(v) if isinstance(v, tuple) else v) for k, v in cfg.items()
                      if k not in ("output", "format")},
           "result": res.to_json_obj()}
    write_out(json.dumps(art, sort_keys=True, indent=1) + "\n", cfg.get("output"))
    return EXIT_OK if res.ok else EXIT_FAIL


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser():
    p = _Parser(prog="quasimaps", description="Exact quasimap series and identity checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--config", help="key=value settings file (flags win)")
        sp.add_argument("--preset")
        sp.add_argument("--order", help="univariate truncation order")
        sp.add_argument("--trunc", help="bivariate truncation N1,N2")
        sp.add_argument("--fixed-point", dest="fixed_point", help="i,j")
        sp.add_argument("--z-depth", dest="z_depth")
        sp.add_argument("-K", dest="k", help="number of R_n beyond R_0")
        sp.add_argument("--profile")
        sp.add_argument("--format", choices=["json", "csv"])
        sp.add_argument("--output", "-o")

    s = sub.add_parser("series", help="compute named series")
    s.add_argument("name", help=", ".join(sorted(SERIES)))
    common(s)
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suites", nargs="+", help="suite names, 'all' or 'fixture'")
    v.add_argument("--fixture", help="series/tables artifact to recompute and compare")
    common(v)
    f = sub.add_parser("fit", help="exact ring-membership fit")
    f.add_argument("target", help="L, UD, R0, R1, ... (asymptotic slices) or a1, a2")
    f.add_argument("--basis", help="G, r, laurent or one")
    f.add_argument("--slice", help="q2-degree of the slice")
    common(f)
    e = sub.add_parser("export", help="export coefficient tables")
    e.add_argument("preset")
    common(e)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {"series": cmd_series, "verify": cmd_verify, "fit": cmd_fit, "export": cmd_export}
    try:
        if args.command == "export":
            args_preset, args.preset = args.preset, None
            cfg = resolve(args)
            args.preset = args_preset
        else:
            cfg = resolve(args)
        return handlers[args.command](args, cfg)
    except UsageError as exc:
        sys.stderr.write(f"quasimaps: {exc}\n")
        return EXIT_USAGE
    except Exception as exc:  # compute failures
        sys.stderr.write(f"quasimaps: compute error: {type(exc).__name__}: {exc}\n")
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())

"""Elliptic generators, their derivative closure, and the quasimodular identities."""

from quasimaps.generators import elliptic_generators, verify_quasimodular, verify_d_closure

g = elliptic_generators(8)
for name in ("L", "I1E", "B1p", "X"):
    print(name, g[name])

# D L and D X close up in L, X
for rec in verify_d_closure(12):
    print(rec["id"], rec["status"])

# E2, E4, E6 after the mirror map; the period-ratio map holds, q*exp(I1E) does not
for mirror in ("period-ratio", "printed"):
    for rec in verify_quasimodular(8, mirror=mirror):
        print(rec["id"], rec["status"], rec["first_mismatch"])

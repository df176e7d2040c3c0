"""S-operator coefficient tables for the twisted models and the ring fits."""

from quasimaps.relations import fit_local_slices, verify_fg2, verify_k3_quadratic, verify_table

for suite in ("e-surface-32", "e-3fold-33", "k3-fib-42"):
    recs = verify_table(suite, 8)
    bad = [r["id"] for r in recs if r["status"] != "pass"]
    print(suite, len(recs), "checks", "failing:", bad or "none")

for rec in verify_k3_quadratic(8, variants=("printed", "quartic")):
    print(rec["id"], rec["status"])

# local fits: slices in L and u, and the genus-two pieces in r
for rec in fit_local_slices(30) + verify_fg2(2, 30):
    print(rec["id"], rec["status"])

"""Local P1xP1: PF operators, asymptotic data, and the relations among the generators."""

from quasimaps.relations import (
    verify_local_leading, verify_pf_annihilation, verify_mg_closed_forms,
    verify_relation_re, verify_root_symmetry, verify_vanishing_jkm)


def show(records):
    for rec in records:
        print(f"{rec['id']:40s} {rec['status']}", rec.get("first_mismatch") or "")


show(verify_pf_annihilation((8, 4)))
show(verify_local_leading(12))
show(verify_root_symmetry(12))
show(verify_mg_closed_forms((5, 3)))
# the transcribed relation only vanishes through q2^2
show(verify_relation_re((5, 3)))
show(verify_vanishing_jkm((6, 3)))

import pytest

from quasimaps.birkhoff import (basis_order, closed_form_s_operators, e_series_local, jkm_series,
                                s_coefficient_tables, s_operators, unitriangularity_defects)
from quasimaps.geometry import LOCAL_P1P1, PRESETS, get_preset


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_unitriangular(name):
    sops = s_operators(get_preset(name), (3, 2))
    assert unitriangularity_defects(sops) == []


@pytest.fixture(scope="module")
def local_tables():
    return jkm_series(LOCAL_P1P1, (4, 2))


def test_closed_form_route(local_tables):
    S, E = closed_form_s_operators(LOCAL_P1P1, (4, 2), local_tables)
    sops = s_operators(LOCAL_P1P1, (4, 2))
    for gam in basis_order(LOCAL_P1P1.ring()):
        assert (S[gam] - sops[gam]).is_zero()
    assert E["E11"].constant_term() == 1


def test_jk_vanish_at_zero(local_tables):
    for k, s in local_tables.items():
        if k[0] in "JK":
            assert s.constant_term().is_zero()
    E = e_series_local(local_tables)
    det = E["E11"] * E["E22"] - E["E12"] * E["E21"]
    assert det.constant_term() == 1


@pytest.mark.parametrize("name", ["e-surface-32", "e-3fold-33", "k3-fib-42"])
def test_tables_have_no_residue(name):
    tab, residue = s_coefficient_tables(s_operators(get_preset(name), (4, 0)))
    assert not residue
    assert all(s.constant_term().is_zero() for s in tab.values())


def test_sample_table_identities():
    s = s_coefficient_tables(s_operators(get_preset("e-surface-32"), (8, 0)))[0]
    assert s["E2"].slice(0).euler(1) * 3 == s["B1"].slice(0).euler(1) * 2
    k = s_coefficient_tables(s_operators(get_preset("k3-fib-42"), (8, 0)))[0]
    assert k["C1"].slice(0).euler(1).is_zero()

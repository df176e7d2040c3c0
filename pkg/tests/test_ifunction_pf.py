from math import factorial

import pytest

from quasimaps.geometry import LOCAL_P1P1, PRESETS, get_preset
from quasimaps.ifunction import (free_i_expansion, i_coefficient_table, reduce_free_expansion,
                                 small_i_function)
from quasimaps.picard_fuchs import pf_operators

TRUNC = (4, 2)


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_pf_annihilates_small_i(name):
    g = get_preset(name)
    I = small_i_function(g, TRUNC, (-3, 8))
    for op in pf_operators(g):
        assert op.apply(I).is_zero()


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_factored_and_word_application_agree(name):
    g = get_preset(name)
    I = small_i_function(g, (3, 1), (-3, 8))
    for op in pf_operators(g):
        a, b = op.apply(I), op.apply_words(I)
        assert (a - b).is_zero()


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_free_expansion_matches_fixed_points(name):
    g = get_preset(name)
    free = free_i_expansion(g, (3, 1), 2)
    I = small_i_function(g, (3, 1), (-2, 2))
    for m in range(3):
        for a, b in zip(reduce_free_expansion(g, free, m), I.data[-m]):
            assert (a - b).is_zero()


def test_z0_part():
    I = small_i_function(LOCAL_P1P1, TRUNC, (-2, 2))
    c0 = I.z_coefficient(0)
    assert (c0[0] - 1).is_zero() and all(s.is_zero() for s in c0[1:])
    g = get_preset("e-surface-32")
    I0 = small_i_function(g, (3, 0), (-1, 2)).z_coefficient(0)[0]
    assert [I0[(d, 0)] for d in range(4)] == [factorial(3 * d) // factorial(d) ** 3 for d in range(4)]


def test_local_table_names():
    tab, left = i_coefficient_table(LOCAL_P1P1, (3, 1), 2)
    assert "I11" in tab and "I12" in tab
    assert all(not s.constant_term() for s in tab.values())
    assert not left

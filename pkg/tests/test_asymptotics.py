from fractions import Fraction

import pytest

from quasimaps.asymptotics import (adaptive_laurent_fit, closed_form_L_local, laurent_basis,
                                   ring_fit, solve_asymptotics, solve_leading)
from quasimaps.geometry import LOCAL_P1P1, PRESETS, get_preset
from quasimaps.series import UniSeries


@pytest.mark.parametrize("p", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_leading_matches_closed_form(p):
    L, UD = solve_leading(LOCAL_P1P1, p, (8, 0))
    assert L.slice(0) == closed_form_L_local(LOCAL_P1P1, p, 8)


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_solution_checks(name):
    g = get_preset(name)
    A = solve_asymptotics(g, (0, 0), (3, 2), K=1, check=True)
    assert A.integrability_defect().is_zero()
    assert A.L.constant_term() == g.weights1[0]
    assert (A.R[0].constant_term() - 1).is_zero() and A.R[1].constant_term().is_zero()
    assert A.log and A.log[0]["unknown"] == "L"


def test_ring_fit_exact_and_controls():
    q = UniSeries.variable(20)
    L = (1 - 27 * q).power(Fraction(-1, 3))
    target = 3 * L ** 2 - L.invert() * 5 + 2
    basis, names = laurent_basis(L, -2, 2)
    res = ring_fit(target, basis, names)
    assert res.ok
    assert dict(zip(names, res.coeffs))["L^2"] == 3
    assert not ring_fit(target + q ** 12, basis, names).ok
    assert ring_fit(L, [L.one_like()], ["1"]).status == "no-solution"
    assert ring_fit(target.truncate(5), basis, names).status == "insufficient-order"
    assert adaptive_laurent_fit(target, L).ok

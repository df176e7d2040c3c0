from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasimaps.field import embed_rational, root_of_unity
from quasimaps.series import (BiSeries, UniSeries, coefficient_slice, reversion,
                              series_from_json, substitute)

small = st.integers(-5, 5)


def bi(trunc=(4, 2), order=4, unit=False):
    n = (trunc[0] + 1) * (trunc[1] + 1)

    def build(vals):
        coeffs = {}
        k = 0
        for d1 in range(trunc[0] + 1):
            for d2 in range(trunc[1] + 1):
                re, im = vals[k]
                coeffs[(d1, d2)] = re + im * root_of_unity(order, 1)
                k += 1
        s = BiSeries(trunc, order, coeffs)
        if unit:
            s = s - s.constant_term() + 1
        return s
    return st.lists(st.tuples(small, small), min_size=n, max_size=n).map(build)


def uni(n=6, zero_const=False, unit=False):
    def build(vals):
        s = UniSeries(n, 1, [Fraction(v) for v in vals])
        if zero_const:
            s = s - s.constant_term()
        if unit:
            s = s - s.constant_term() + 1
        return s
    return st.lists(small, min_size=n + 1, max_size=n + 1).map(build)


def test_small_examples():
    q = UniSeries.variable(5)
    assert ((1 + q) * (1 - q)).truncate(2) == (1 - q * q).truncate(2)
    geo = UniSeries(5, 1, [1] * 6)
    assert (geo * (1 - q)).truncate(5) == UniSeries.one(5)
    assert (1 - q).invert() == geo
    t = BiSeries.monomial(2, 1, (3, 2))
    assert t.euler(1) == BiSeries.monomial(2, 1, (3, 2), coeff=2)
    assert BiSeries.constant(7, (3, 2)).euler(1).is_zero()


def test_truncation_is_minimum():
    a = BiSeries.one((4, 2))
    b = BiSeries.one((3, 5))
    assert (a * b).trunc == (3, 2)


def test_elliptic_L_derivative():
    q = UniSeries.variable(8)
    L = (1 - 27 * q).power(Fraction(-1, 3))
    assert L.euler(1) == L * (L ** 3 - 1) * Fraction(1, 3)


@given(bi(unit=True))
def test_inverse(a):
    assert (a * a.invert() - 1).is_zero()


@given(bi(), bi())
def test_leibniz(a, b):
    for axis in (1, 2):
        assert (a * b).euler(axis) == a.euler(axis) * b + a * b.euler(axis)


@given(bi(order=4), bi(order=4), bi(order=4))
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(bi(unit=True, order=1), st.sampled_from([2, 3, 4]))
def test_nth_root(a, n):
    r = a.nth_root(n)
    assert r ** n == a


@given(bi(order=4))
def test_exp_log(a):
    x = a - a.constant_term()
    assert x.exp().log() == x


@given(uni(zero_const=True))
def test_reversion(s):
    if s[1].is_zero():
        s = s + UniSeries.variable(s.N)
    t = reversion(s)
    q = UniSeries.variable(s.N)
    assert substitute(s, t) == q
    assert substitute(t, s) == q


def test_reversion_needs_linear_term():
    q = UniSeries.variable(4)
    with pytest.raises(ValueError):
        reversion(q * q)


@given(bi(order=4))
def test_slice_and_json(a):
    for k in range(a.trunc[1] + 1):
        s = coefficient_slice(a, k)
        for d in range(a.trunc[0] + 1):
            assert s[d] == a[(d, k)]
    assert series_from_json(a.to_json()) == a


def test_power_needs_branch():
    s = UniSeries(3, 4, [-1, 1])
    with pytest.raises(ValueError):
        s.power(Fraction(1, 2))
    r = s.nth_root(2, root_of_unity(4, 1))
    assert r * r == s

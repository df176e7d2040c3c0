from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quasimaps.field import (CycloRational, cyclotomic_polynomial, embed_rational,
                             field_op, parse_literal, root_of_unity)

ORDERS = [1, 2, 3, 4, 12]
rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10**6)


def element(order):
    from quasimaps.field import CyclotomicField
    deg = CyclotomicField(order).degree
    return st.lists(rationals, min_size=deg, max_size=deg).map(lambda c: CycloRational(order, c))


elements = st.sampled_from(ORDERS).flatmap(lambda n: st.tuples(element(n), element(n), element(n)))


def test_i_squared():
    w = root_of_unity(4, 1)
    assert w * w == embed_rational(-1, 4)


def test_cube_roots_sum_to_zero():
    assert (root_of_unity(3, 0) + root_of_unity(3, 1) + root_of_unity(3, 2)).is_zero()


def test_zeta12_cubed_is_i():
    assert root_of_unity(12, 3) == root_of_unity(4, 1).embed(12)


def test_division_by_one_plus_i():
    one = embed_rational(1, 4)
    i = root_of_unity(4, 1)
    assert one / (one + i) == CycloRational(4, [Fraction(1, 2), Fraction(-1, 2)])


def test_rational_ops():
    assert embed_rational(Fraction(1, 2)) + embed_rational(Fraction(1, 3)) == embed_rational(Fraction(5, 6))
    assert root_of_unity(3, 1) * root_of_unity(3, 2) == embed_rational(1, 3)
    assert embed_rational(0, 4).is_zero()


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        embed_rational(1, 4) / embed_rational(0, 4)


def test_incompatible_orders_need_embedding():
    with pytest.raises((ValueError, TypeError)):
        root_of_unity(3, 1) + root_of_unity(4, 1)


@pytest.mark.parametrize("n", ORDERS)
def test_root_of_unity_order(n):
    w = root_of_unity(n, 1)
    assert w ** n == embed_rational(1, n)
    # Phi_n(w) = 0
    acc = embed_rational(0, n)
    for k, c in enumerate(cyclotomic_polynomial(n)):
        acc = acc + w ** k * c
    assert acc.is_zero()


@given(elements)
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == a * 0
    if not a.is_zero():
        assert a * a.inverse() == embed_rational(1, a.order)


@given(st.sampled_from([3, 4]).flatmap(lambda n: st.tuples(element(n), element(n))))
def test_embedding_commutes(t):
    a, b = t
    assert (a * b).embed(12) == a.embed(12) * b.embed(12)
    assert (a + b).embed(12) == a.embed(12) + b.embed(12)


@given(st.sampled_from(ORDERS).flatmap(element))
def test_literal_round_trip(a):
    assert parse_literal(a.to_literal(header=True)) == a
    assert parse_literal(a.to_literal(), a.order).c == a.c


def test_field_op_dispatch():
    a, b = embed_rational(3, 4), embed_rational(2, 4)
    assert field_op(a, b, "/") == embed_rational(Fraction(3, 2), 4)

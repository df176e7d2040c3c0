import pytest
from hypothesis import given, strategies as st

from quasimaps.cohomology import local_p1p1_classes
from quasimaps.field import embed_rational
from quasimaps.geometry import LOCAL_P1P1, PRESETS, get_preset


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_preset_shape(name):
    g = get_preset(name)
    ring = g.ring()
    assert ring.rank == (g.n[0] + 1) * (g.n[1] + 1)
    assert len(ring.fixed_points) == ring.rank
    t1, t2 = g.twist
    # Calabi-Yau condition: twist degrees equal the numbers of homogeneous coordinates
    if g.local:
        assert (t1, t2) == (-2, -2)
    else:
        assert t1 == g.n[0] + 1


def test_aliases_and_errors():
    assert get_preset("E_SURFACE_32").name == "e-surface-32"
    assert get_preset("42").name == "k3-fib-42"
    with pytest.raises(KeyError):
        get_preset("P5")


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_relations_vanish(name):
    ring = get_preset(name).ring()
    H1, H2 = ring.H(1), ring.H(2)
    r1 = ring.one()
    for w in ring.weights[0]:
        r1 = r1 * (H1 - w)
    r2 = ring.one()
    for w in ring.weights[1]:
        r2 = r2 * (H2 - w)
    assert r1.is_zero() and r2.is_zero()


@given(st.data())
def test_restrict_interpolate_round_trip(data):
    name = data.draw(st.sampled_from(sorted(PRESETS)))
    ring = get_preset(name).ring()
    vals = [embed_rational(data.draw(st.integers(-9, 9)), ring.order) for _ in ring.fixed_points]
    c = ring.from_fixed_point_values(vals)
    assert c.restrict_to_fixed_points() == vals


@given(st.data())
def test_restriction_is_multiplicative(data):
    name = data.draw(st.sampled_from(sorted(PRESETS)))
    ring = get_preset(name).ring()
    a = ring.monomial(data.draw(st.integers(0, 3)), data.draw(st.integers(0, 2)))
    b = ring.monomial(data.draw(st.integers(0, 3)), data.draw(st.integers(0, 2)))
    ra, rb, rab = a.restrict_to_fixed_points(), b.restrict_to_fixed_points(), (a * b).restrict_to_fixed_points()
    assert rab == [x * y for x, y in zip(ra, rb)]


def test_local_classes_are_idempotents():
    ring = LOCAL_P1P1.ring()
    lower, upper, e = local_p1p1_classes(ring)
    one, zero = embed_rational(1, ring.order), embed_rational(0, ring.order)
    for p, phi in lower.items():
        vals = phi.restrict_to_fixed_points()
        assert vals == [one if tuple(q) == p else zero for q in ring.fixed_points]
        assert upper[p] == phi * e[p]

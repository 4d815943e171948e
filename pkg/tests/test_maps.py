import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylpath.kernel import (
    canonical_iso,
    compose_map,
    count_maps,
    enumerate_maps,
    identity_map,
    is_iso,
    pairing,
    product,
    product_map,
    standard_simplex,
    times,
    top_simplex,
    two_points,
    validate_map,
    yoneda,
)
from cylpath.kernel.zoo import boundary, horn

from oracles import chain, count_order_preserving, poset_product

SMALL = [standard_simplex(0), standard_simplex(1), standard_simplex(2), two_points(), boundary(2), horn(2, 1)]


@pytest.mark.parametrize("n", range(3))
@pytest.mark.parametrize("m", range(3))
def test_maps_between_simplices_match_poset_count(n, m):
    assert count_maps(standard_simplex(n), standard_simplex(m)) == count_order_preserving(chain(n), chain(m))


@pytest.mark.parametrize("m", range(3))
def test_maps_out_of_a_square_match_poset_count(m):
    D1 = standard_simplex(1)
    square = poset_product(chain(1), chain(1))
    assert count_maps(times(D1, D1), standard_simplex(m)) == count_order_preserving(square, chain(m))


@pytest.mark.parametrize("X", SMALL, ids=lambda X: X.name)
@pytest.mark.parametrize("Y", SMALL[:3], ids=lambda Y: Y.name)
def test_enumerated_maps_are_valid_and_distinct(X, Y):
    maps = enumerate_maps(X, Y)
    assert len({f.key() for f in maps}) == len(maps)
    for f in maps:
        assert not validate_map(f).failures


def test_enumeration_is_deterministic():
    D1, D2 = standard_simplex(1), standard_simplex(2)
    assert [f.key() for f in enumerate_maps(D2, D1)] == [f.key() for f in enumerate_maps(D2, D1)]


def test_projections_and_pairing():
    D1, D2 = standard_simplex(1), standard_simplex(2)
    P, p1, p2 = product(D1, D2)
    for f in enumerate_maps(D1, D1):
        for g in enumerate_maps(D1, D2):
            h = pairing(f, g)
            assert compose_map(p1, h) == f and compose_map(p2, h) == g


def test_product_level_sizes_are_products():
    D1, D2 = standard_simplex(1), standard_simplex(2)
    P = times(D1, D2)
    assert P.level_sizes(4) == [a * b for a, b in zip(D1.level_sizes(4), D2.level_sizes(4))]
    assert not validate_map(identity_map(P)).failures


@pytest.mark.parametrize("kind, operands", [("swap", (1, 2)), ("assoc", (1, 1, 1)), ("unit_r", (2,))])
def test_canonical_isos_are_isos(kind, operands):
    iso = canonical_iso(kind, *[standard_simplex(k) for k in operands])
    ok, inv = is_iso(iso)
    assert ok
    assert compose_map(inv, iso) == identity_map(iso.dom)
    assert not validate_map(iso).failures


def test_product_map_is_functorial():
    D1, D2 = standard_simplex(1), standard_simplex(2)
    for f in enumerate_maps(D1, D2):
        for g in enumerate_maps(D2, D1):
            lhs = product_map(compose_map(g, f), compose_map(f, g))
            rhs = compose_map(product_map(g, f), product_map(f, g))
            assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_yoneda_picks_its_simplex(K, data):
    n = data.draw(st.integers(0, 2))
    level = K.level(n)
    if not level:
        return
    k = data.draw(st.sampled_from(level))
    y = yoneda(K, k)
    top = top_simplex(n)
    assert y(top) == k
    assert not validate_map(y).failures

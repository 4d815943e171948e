import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylpath.enrichment.complex import function_complex, precompose_operator
from cylpath.enrichment.ops import (
    ev,
    hom_action_post,
    hom_action_pre,
    sharp,
    sharp_inv,
    standard_diagonal,
    tilde,
    ub,
    untilde,
)
from cylpath.enrichment.tables import level_table, post_table, pre_table, ub_table
from cylpath.kernel import (
    compose_map,
    enumerate_maps,
    identity_map,
    standard_simplex,
    times,
    top_simplex,
    two_points,
    validate_sset,
)
from cylpath.kernel import monotone as mono

from oracles import chain, count_order_preserving, poset_product

D0, D1, D2 = (standard_simplex(n) for n in range(3))


@pytest.mark.parametrize("a, b", [(0, 1), (1, 1), (1, 2), (2, 1)])
@pytest.mark.parametrize("n", range(3))
def test_level_sizes_match_poset_count(a, b, n):
    h = function_complex(standard_simplex(a), standard_simplex(b), 2)
    assert len(h.level(n)) == count_order_preserving(poset_product(chain(a), chain(n)), chain(b))


def test_delta1_self_hom_levels():
    h = function_complex(D1, D1, 2)
    assert h.level_sizes(2) == [3, 6, 10]


@pytest.mark.parametrize("X, Y", [(D1, D1), (two_points(), D1), (D1, D2)], ids=lambda S: S.name)
def test_function_complex_is_a_simplicial_set(X, Y):
    h = function_complex(X, Y, 2)
    assert not validate_sset(h).failures


def test_faces_are_restrictions_of_underlying_maps():
    h = function_complex(D1, D2, 2)
    for s in h.level(2):
        F = h.underlying(s)
        for i in range(3):
            assert h.underlying(h.face(s, i)) == precompose_operator(F, mono.coface(2, i))


@pytest.mark.parametrize("X, Y", [(D1, D1), (D2, D1), (two_points(), D2)], ids=lambda S: S.name)
def test_tilde_is_a_bijection_onto_vertices(X, Y):
    h = function_complex(X, Y, 1)
    maps = enumerate_maps(X, Y)
    vertices = [tilde(f, 1) for f in maps]
    assert sorted(map(repr, vertices)) == sorted(map(repr, h.level(0)))
    for f, v in zip(maps, vertices):
        assert untilde(v, h) == f


def test_evaluation_reads_underlying_maps():
    e = ev(D1, D1, 2)
    h = function_complex(D1, D1, 2)
    P = times(D1, h)
    for s in P.level(1):
        x, F = P.components(s)
        G = h.underlying(F)
        assert e(s) == G(G.dom.pair(x, top_simplex(1)))
        assert e(s) == h.evaluate(F, x)


# -- composition -------------------------------------------------------------


def _unit(X, n, D):
    return function_complex(X, X, D).act(tilde(identity_map(X), D), mono.constant(n))


@pytest.mark.parametrize("n", range(3))
def test_ub_units(n):
    hXY = function_complex(D1, D2, 2)
    for f in hXY.level(n):
        assert ub(_unit(D1, n, 2), f, function_complex(D1, D1, 2), hXY) == f
        assert ub(f, _unit(D2, n, 2), hXY, function_complex(D2, D2, 2)) == f


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_ub_associative_on_samples(data):
    n = data.draw(st.integers(0, 2))
    X, Y, Z, W = (data.draw(st.sampled_from([D0, D1, D2])) for _ in range(4))
    hXY, hYZ, hZW = function_complex(X, Y, 2), function_complex(Y, Z, 2), function_complex(Z, W, 2)
    f, g, k = (data.draw(st.sampled_from(h.level(n))) for h in (hXY, hYZ, hZW))
    hXZ, hYW = function_complex(X, Z, 2), function_complex(Y, W, 2)
    assert ub(ub(f, g, hXY, hYZ), k, hXZ, hZW) == ub(f, ub(g, k, hYZ, hZW), hXY, hYW)


@pytest.mark.parametrize("n", range(3))
def test_ub_table_agrees_with_literal_composite(n):
    X, Y, Z = D1, D1, D2
    tXY, tYZ, tXZ = (level_table(function_complex(A, B, 2), n) for A, B in ((X, Y), (Y, Z), (X, Z)))
    U = ub_table(tXY, tYZ, tXZ, standard_diagonal(n))
    for i, f in enumerate(tXY.simplices):
        for j, g in enumerate(tYZ.simplices):
            assert tXZ.simplices[U[i, j]] == ub(f, g, tXY.h, tYZ.h)


@pytest.mark.parametrize("n", range(3))
def test_hom_action_tables_agree_with_literal_maps(n):
    for v in enumerate_maps(D1, D2):
        lit = hom_action_post(D1, v, 2)
        t_src, t_dst = level_table(function_complex(D1, D1, 2), n), level_table(function_complex(D1, D2, 2), n)
        fast = post_table(t_src, t_dst, v)
        assert [t_dst.simplices[i] for i in fast] == [lit(s) for s in t_src.simplices]
    for u in enumerate_maps(D1, D2):
        lit = hom_action_pre(u, D1, 2)
        t_src, t_dst = level_table(function_complex(D2, D1, 2), n), level_table(function_complex(D1, D1, 2), n)
        fast = pre_table(t_src, t_dst, u)
        assert np.all(fast >= 0)
        assert [t_dst.simplices[i] for i in fast] == [lit(s) for s in t_src.simplices]


def test_hom_actions_are_functorial():
    for u in enumerate_maps(D0, D1):
        for w in enumerate_maps(D1, D2):
            lhs = hom_action_pre(compose_map(w, u), D1, 2)
            rhs = compose_map(hom_action_pre(u, D1, 2), hom_action_pre(w, D1, 2))
            assert lhs == rhs
            lhs = hom_action_post(D0, compose_map(w, u), 2)
            rhs = compose_map(hom_action_post(D0, w, 2), hom_action_post(D0, u, 2))
            assert lhs == rhs


# -- currying ------------------------------------------------------------------


@pytest.mark.parametrize("X, K, Y", [(D1, D1, D1), (D0, D1, D2), (two_points(), D1, D1)], ids=lambda S: S.name)
def test_sharp_routes_agree_and_invert(X, K, Y):
    h = function_complex(X, Y, 3)
    curried = enumerate_maps(K, h)
    uncurried = enumerate_maps(times(X, K), Y)
    assert len(curried) == len(uncurried)
    for u in curried:
        pointwise, composite = sharp(u), sharp(u, via="composite")
        assert pointwise == composite
        assert sharp_inv(pointwise, 3) == u
    for g in uncurried:
        assert sharp(sharp_inv(g, 3)) == g


def test_sharp_rejects_unknown_route():
    u = enumerate_maps(D0, function_complex(D0, D0, 1))[0]
    with pytest.raises(ValueError):
        sharp(u, via="sideways")

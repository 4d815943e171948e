from hypothesis import given
from hypothesis import strategies as st

from cylpath.kernel import MonotoneMap, factor_monotone
from cylpath.kernel import monotone as mono

from oracles import count_weakly_increasing


@st.composite
def monotone(draw, n=None, m=None):
    n = draw(st.integers(0, 4)) if n is None else n
    m = draw(st.integers(0, 4)) if m is None else m
    values = sorted(draw(st.lists(st.integers(0, m), min_size=n + 1, max_size=n + 1)))
    return MonotoneMap(tuple(values), m)


@st.composite
def composable_triple(draw):
    a, b, c, d = (draw(st.integers(0, 3)) for _ in range(4))
    return draw(monotone(a, b)), draw(monotone(b, c)), draw(monotone(c, d))


@given(composable_triple())
def test_composition_is_associative(triple):
    f, g, h = triple
    assert h.after(g).after(f) == h.after(g.after(f))


@given(monotone())
def test_identities_are_neutral(f):
    assert f.after(MonotoneMap.identity(f.source_dim)) == f
    assert MonotoneMap.identity(f.target_dim).after(f) == f


@given(monotone())
def test_factorization_recomposes(f):
    sur, inj = factor_monotone(f)
    assert sur.is_surjective() and inj.is_injective()
    assert inj.after(sur) == f


@given(monotone())
def test_surjective_iff_every_value_hit(f):
    assert f.is_surjective() == (set(f.values) == set(range(f.target_dim + 1)))
    assert f.is_injective() == all(a < b for a, b in zip(f.values, f.values[1:]))


def test_cosimplicial_identity_on_cofaces():
    for n in range(4):
        for j in range(n + 2):
            for i in range(j):
                # δ_j δ_i = δ_i δ_{j-1} as maps [n] → [n+2]
                assert mono.compose(mono.coface(n + 2, j), mono.coface(n + 1, i)) == mono.compose(
                    mono.coface(n + 2, i), mono.coface(n + 1, j - 1)
                )


def test_monotone_map_counts_match_brute_force():
    for n in range(4):
        for m in range(4):
            assert len(list(mono.monotone_maps(n, m))) == count_weakly_increasing(n, m)

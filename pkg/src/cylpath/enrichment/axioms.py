"""Exhaustive check of the enrichment laws on a finite list of simplicial sets.

Every law is evaluated on index tables (see :mod:`.tables`); a sample of
each table is recomputed through the literal composite definitions so the
fast route is never trusted on its own.
"""

from __future__ import annotations

from itertools import product as cartesian

import numpy as np

from ..kernel import monotone as mono
from ..kernel.enumerate import enumerate_maps
from ..kernel.maps import compose_map, identity_map
from ..kernel.sset import FiniteSimplicialSet
from ..report import VerificationReport
from .complex import function_complex
from .ops import hom_action_post, hom_action_pre, standard_diagonal, tilde, ub, untilde
from .tables import level_table, post_table, pre_table, ub_table

SAMPLES = 4


def _spread(size: int, count: int = SAMPLES) -> list[int]:
    if size <= count:
        return list(range(size))
    return sorted({round(k * (size - 1) / (count - 1)) for k in range(count)})


def _first_mismatch(a: np.ndarray, b: np.ndarray):
    bad = np.argwhere(a != b)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


class _Context:
    def __init__(self, fixtures, D, diagonal_for):
        self.fixtures = list(fixtures)
        self.D = D
        self.diagonal_for = diagonal_for
        self._homs = {}
        self._ub = {}

    def h(self, X, Y):
        return function_complex(X, Y, self.D)

    def t(self, X, Y, n):
        return level_table(self.h(X, Y), n)

    def homs(self, X, Y):
        key = (id(X), id(Y))
        if key not in self._homs:
            self._homs[key] = enumerate_maps(X, Y)
        return self._homs[key]

    def U(self, X, Y, Z, n):
        key = (id(X), id(Y), id(Z), n)
        if key not in self._ub:
            self._ub[key] = ub_table(self.t(X, Y, n), self.t(Y, Z, n), self.t(X, Z, n), self.diagonal_for(n))
        return self._ub[key]

    def zero_index(self, X, Y, f, n):
        """Position of (σ_0^n)^*(tilde f) in level n of usSet(X, Y)."""
        h = self.h(X, Y)
        return self.t(X, Y, n).position[h.act(tilde(f, self.D), mono.constant(n))]


def _names(*objs) -> str:
    return ",".join(o.name for o in objs)


def check_enrichment_axioms(
    fixtures: list[FiniteSimplicialSet], D: int, diagonal_for=standard_diagonal
) -> VerificationReport:
    """Hom functoriality, simplicial composition, the 0-simplex bijection,
    associativity, both unit laws and compatibility of level-0 composition,
    for all fixture tuples and all levels up to D."""
    ctx = _Context(fixtures, D, diagonal_for)
    report = VerificationReport(f"axioms D={D}")
    objs = ctx.fixtures
    levels = range(D + 1)

    for X, Y, Z in cartesian(objs, repeat=3):
        for n in levels:
            _cross_check_ub(ctx, report, X, Y, Z, n)
    for X, Y in cartesian(objs, repeat=2):
        _check_tilde(ctx, report, X, Y)
    for X, Y, Z in cartesian(objs, repeat=3):
        for n in levels:
            _check_hom_functor(ctx, report, X, Y, Z, n)
            _check_units(ctx, report, X, Y, Z, n)
            _check_simplicial(ctx, report, X, Y, Z, n)
        _check_level_zero(ctx, report, X, Y, Z)
    for X, Y, Z, W in cartesian(objs, repeat=4):
        for n in levels:
            _check_assoc(ctx, report, X, Y, Z, W, n)
    return report


def _cross_check_ub(ctx, report, X, Y, Z, n):
    U = ctx.U(X, Y, Z, n)
    tXY, tYZ, tXZ = ctx.t(X, Y, n), ctx.t(Y, Z, n), ctx.t(X, Z, n)
    inst = f"{_names(X, Y, Z)} n={n}"
    if (U < 0).any():
        f, g = (int(v) for v in np.argwhere(U < 0)[0])
        report.record("ub-well-defined", inst, False, f"composite of {tXY.simplices[f]} and {tYZ.simplices[g]} is no simplex")
        return
    for f in _spread(len(tXY)):
        for g in _spread(len(tYZ)):
            lit = ub(tXY.simplices[f], tYZ.simplices[g], tXY.h, tYZ.h, diagonal_for=ctx.diagonal_for)
            if lit != tXZ.simplices[U[f, g]]:
                report.record("ub-routes", inst, False, f"f={tXY.simplices[f]} g={tYZ.simplices[g]}: literal {lit} table {tXZ.simplices[U[f, g]]}")
                return
    report.record("ub-routes", inst, True)


def _check_tilde(ctx, report, X, Y):
    inst = _names(X, Y)
    h = ctx.h(X, Y)
    maps = ctx.homs(X, Y)
    images = [tilde(f, ctx.D) for f in maps]
    level0 = h.level(0)
    ok = len(set(images)) == len(maps) == len(level0)
    report.record("tilde-bijective", inst, ok, f"{len(maps)} maps, {len(set(images))} images, {len(level0)} vertices")
    back = next((f for f, s in zip(maps, images) if untilde(s, h) != f), None)
    report.record("tilde-roundtrip", inst, back is None, f"untilde(tilde f) != f for {back and back.key()}")
    # naturality in each slot against every fixture morphism
    t0 = ctx.t(X, Y, 0)
    idx = [t0.position[s] for s in images]
    for W in ctx.fixtures:
        tWY = ctx.t(W, Y, 0)
        for u in ctx.homs(W, X):
            pre = pre_table(t0, tWY, u)
            want = [tWY.position[tilde(compose_map(f, u), ctx.D)] for f in maps]
            bad = next((i for i, f in enumerate(maps) if pre[idx[i]] != want[i]), None)
            report.record("tilde-natural-source", f"{inst} via {W.name}->{X.name}", bad is None, f"at map #{bad}")
        tXW = ctx.t(X, W, 0)
        for v in ctx.homs(Y, W):
            post = post_table(t0, tXW, v)
            want = [tXW.position[tilde(compose_map(v, f), ctx.D)] for f in maps]
            bad = next((i for i, f in enumerate(maps) if post[idx[i]] != want[i]), None)
            report.record("tilde-natural-target", f"{inst} via {Y.name}->{W.name}", bad is None, f"at map #{bad}")


def _check_hom_functor(ctx, report, X, Y, Z, n):
    """Pre/post actions: identities, composition, and the two slots commute."""
    D = ctx.D
    inst = f"{_names(X, Y, Z)} n={n}"
    tXY = ctx.t(X, Y, n)
    ident = np.arange(len(tXY))
    if Z is X:
        pre_id = pre_table(tXY, tXY, identity_map(X))
        post_id = post_table(tXY, tXY, identity_map(Y))
        ok = bool((pre_id == ident).all() and (post_id == ident).all())
        report.record("hom-identity", f"{_names(X, Y)} n={n}", ok, "identity action moves a simplex")
    # contravariant slot: maps into X from Z, then from every W into Z
    tZY = ctx.t(Z, Y, n)
    pres = {}
    for u in ctx.homs(Z, X):
        arr = pre_table(tXY, tZY, u)
        pres[u] = arr
        if u is ctx.homs(Z, X)[0] or n == 0:
            _sample_literal(report, "hom-pre-routes", inst, tXY, tZY, arr, lambda: hom_action_pre(u, Y, D))
    failed = None
    for W in ctx.fixtures:
        tWY = ctx.t(W, Y, n)
        for w in ctx.homs(W, Z):
            pre_w = pre_table(tZY, tWY, w)
            for u, pre_u in pres.items():
                wit = _first_mismatch(pre_table(tXY, tWY, compose_map(u, w)), pre_w[pre_u])
                if wit is not None:
                    failed = f"via {W.name}: at simplex #{wit[0]} of {tXY.h.name}"
                    break
            if failed:
                break
        if failed:
            break
    report.record("hom-pre-composition", inst, failed is None, failed)
    # covariant slot: Y -> Z then Z -> W
    tXZ = ctx.t(X, Z, n)
    posts = {}
    for v in ctx.homs(Y, Z):
        arr = post_table(tXY, tXZ, v)
        posts[v] = arr
        if v is ctx.homs(Y, Z)[0] or n == 0:
            _sample_literal(report, "hom-post-routes", inst, tXY, tXZ, arr, lambda: hom_action_post(X, v, D))
    failed = None
    for W in ctx.fixtures:
        tXW = ctx.t(X, W, n)
        for w in ctx.homs(Z, W):
            post_w = post_table(tXZ, tXW, w)
            for v, post_v in posts.items():
                wit = _first_mismatch(post_table(tXY, tXW, compose_map(w, v)), post_w[post_v])
                if wit is not None:
                    failed = f"via {W.name}: at simplex #{wit[0]} of {tXY.h.name}"
                    break
            if failed:
                break
        if failed:
            break
    report.record("hom-post-composition", inst, failed is None, failed)
    # the two actions commute: pre along Z -> X and post along Y -> Z' for Z' = Z
    failed = None
    tZZ = ctx.t(Z, Z, n)
    for u, pre_u in pres.items():
        for v, post_v in posts.items():
            post_on_Z = post_table(tZY, tZZ, v)
            pre_on_Z = pre_table(tXZ, tZZ, u)
            wit = _first_mismatch(post_on_Z[pre_u], pre_on_Z[post_v])
            if wit is not None:
                failed = f"u#{list(pres).index(u)} v#{list(posts).index(v)} at simplex #{wit[0]}"
                break
        if failed:
            break
    report.record("hom-bifunctor", inst, failed is None, failed)


def _sample_literal(report, anchor, inst, src, dst, arr, build):
    f = build()
    for i in _spread(len(src)):
        got = f(src.simplices[i])
        if arr[i] < 0 or got != dst.simplices[arr[i]]:
            report.record(anchor, inst, False, f"{src.simplices[i]}: literal {got}, table #{arr[i]}")
            return
    report.record(anchor, inst, True)


def _check_units(ctx, report, X, Y, Z, n):
    """Post-composition with g equals composition with (σ_0^n)^* tilde g, and dually."""
    inst = f"{_names(X, Y, Z)} n={n}"
    U = ctx.U(X, Y, Z, n)
    tXY, tYZ, tXZ = ctx.t(X, Y, n), ctx.t(Y, Z, n), ctx.t(X, Z, n)
    failed = None
    for k, g in enumerate(ctx.homs(Y, Z)):
        wit = _first_mismatch(post_table(tXY, tXZ, g), U[:, ctx.zero_index(Y, Z, g, n)])
        if wit is not None:
            failed = f"g#{k}, f={tXY.simplices[wit[0]]}"
            break
    report.record("unit-post", inst, failed is None, failed)
    failed = None
    for k, f in enumerate(ctx.homs(X, Y)):
        wit = _first_mismatch(pre_table(tYZ, tXZ, f), U[ctx.zero_index(X, Y, f, n), :])
        if wit is not None:
            failed = f"f#{k}, g={tYZ.simplices[wit[0]]}"
            break
    report.record("unit-pre", inst, failed is None, failed)


def _check_simplicial(ctx, report, X, Y, Z, n):
    """Composition commutes with faces (into level n-1) and degeneracies (into n+1)."""
    inst = f"{_names(X, Y, Z)} n={n}"
    U = ctx.U(X, Y, Z, n)
    tXY, tYZ, tXZ = ctx.t(X, Y, n), ctx.t(Y, Z, n), ctx.t(X, Z, n)
    failed = None
    if n >= 1:
        below = ctx.U(X, Y, Z, n - 1)
        for i in range(n + 1):
            fa, fb, fc = tXY.face_index(i), tYZ.face_index(i), tXZ.face_index(i)
            wit = _first_mismatch(below[fa[:, None], fb[None, :]], fc[U])
            if wit is not None:
                failed = f"d_{i} at ({tXY.simplices[wit[0]]}, {tYZ.simplices[wit[1]]})"
                break
        report.record("ub-faces", inst, failed is None, failed)
    failed = None
    if n < ctx.D:
        above = ctx.U(X, Y, Z, n + 1)
        for j in range(n + 1):
            sa, sb, sc = tXY.degeneracy_index(j), tYZ.degeneracy_index(j), tXZ.degeneracy_index(j)
            wit = _first_mismatch(above[sa[:, None], sb[None, :]], sc[U])
            if wit is not None:
                failed = f"s_{j} at ({tXY.simplices[wit[0]]}, {tYZ.simplices[wit[1]]})"
                break
        report.record("ub-degeneracies", inst, failed is None, failed)


def _check_level_zero(ctx, report, X, Y, Z):
    """Level-0 composition of tilde f and tilde g is tilde of g ∘ f."""
    U = ctx.U(X, Y, Z, 0)
    tXY, tYZ, tXZ = ctx.t(X, Y, 0), ctx.t(Y, Z, 0), ctx.t(X, Z, 0)
    failed = None
    for f in ctx.homs(X, Y):
        i = tXY.position[tilde(f, ctx.D)]
        for g in ctx.homs(Y, Z):
            want = tXZ.position[tilde(compose_map(g, f), ctx.D)]
            if U[i, tYZ.position[tilde(g, ctx.D)]] != want:
                failed = f"f={f.key()} g={g.key()}"
                break
        if failed:
            break
    report.record("tilde-composition", _names(X, Y, Z), failed is None, failed)


def _check_assoc(ctx, report, X, Y, Z, W, n):
    """(h ∘ g) ∘ f = h ∘ (g ∘ f) on every triple of n-simplices."""
    inst = f"{_names(X, Y, Z, W)} n={n}"
    UXYZ, UXZW = ctx.U(X, Y, Z, n), ctx.U(X, Z, W, n)
    UYZW, UXYW = ctx.U(Y, Z, W, n), ctx.U(X, Y, W, n)
    left = UXZW[UXYZ[:, :, None], np.arange(UXZW.shape[1])[None, None, :]]
    right = UXYW[np.arange(UXYW.shape[0])[:, None, None], UYZW[None, :, :]]
    wit = _first_mismatch(left, right)
    if wit is None:
        report.record("associativity", inst, True)
        return
    f, g, h = wit
    names = (ctx.t(X, Y, n).simplices[f], ctx.t(Y, Z, n).simplices[g], ctx.t(Z, W, n).simplices[h])
    report.record("associativity", inst, False, "f={} g={} h={}".format(*names))

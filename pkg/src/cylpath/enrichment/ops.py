"""Composition, the 0-simplex correspondence, evaluation and currying."""

from __future__ import annotations

from ..kernel import monotone as mono
from ..kernel.maps import SimplicialMap, compose_map, constant_map, identity_map, yoneda
from ..kernel.product import canonical_iso, diagonal, pairing, product_map, times
from ..kernel.sset import FiniteSimplicialSet, SimplexRef, nd, standard_simplex
from .complex import FunctionComplex, function_complex


def hom_action_pre(u: SimplicialMap, Y: FiniteSimplicialSet, D: int) -> SimplicialMap:
    """usSet(u, Y) : usSet(X, Y) → usSet(Z, Y) for u : Z → X, by F ↦ F ∘ (u × id)."""
    src, dst = function_complex(u.cod, Y, D), function_complex(u.dom, Y, D)

    def rule(x):
        F = src.underlying(nd(x, src.dim_of(x)))
        return dst.ref_of_map(compose_map(F, product_map(u, identity_map(F.dom.right))))

    return SimplicialMap(src, dst, rule=rule, up_to=D, name=f"[{u.label()},{Y.name}]")


def hom_action_post(X: FiniteSimplicialSet, v: SimplicialMap, D: int) -> SimplicialMap:
    """usSet(X, v) : usSet(X, Y) → usSet(X, Z) for v : Y → Z, by F ↦ v ∘ F."""
    src, dst = function_complex(X, v.dom, D), function_complex(X, v.cod, D)

    def rule(x):
        F = src.underlying(nd(x, src.dim_of(x)))
        return dst.ref_of_map(compose_map(v, F))

    return SimplicialMap(src, dst, rule=rule, up_to=D, name=f"[{X.name},{v.label()}]")


def standard_diagonal(n: int) -> SimplicialMap:
    return diagonal(standard_simplex(n))


def dropped_diagonal(n: int) -> SimplicialMap:
    """A deliberately wrong stand-in for the diagonal: t ↦ (t, vertex 0)."""
    S = standard_simplex(n)
    return pairing(identity_map(S), constant_map(S, S, SimplexRef((0,), (0,))))


def ub(
    f: SimplexRef,
    g: SimplexRef,
    hXY: FunctionComplex,
    hYZ: FunctionComplex,
    diagonal_for=standard_diagonal,
) -> SimplexRef:
    """Composition usSet(X,Y)_n × usSet(Y,Z)_n → usSet(X,Z)_n.

    The underlying map is g ∘ (f × id_Δ[n]) ∘ assoc⁻¹ ∘ (id_X × δ_Δ[n]),
    with the bracketing (X × Δ[n]) × Δ[n] fixed by the associator.
    """
    if f.dim != g.dim:
        raise ValueError(f"ub needs simplices of equal dimension, got {f.dim} and {g.dim}")
    if hXY.target is not hYZ.source:
        raise ValueError("ub needs composable function complexes")
    X, Y, Z = hXY.source, hXY.target, hYZ.target
    n = f.dim
    S = standard_simplex(n)
    hXZ = function_complex(X, Z, hXY.trunc_dim)
    F, G = hXY.underlying(f), hYZ.underlying(g)
    step1 = product_map(identity_map(X), diagonal_for(n))
    step2 = canonical_iso("assoc", X, S, S).inverse
    step3 = product_map(F, identity_map(S))
    whole = compose_map(G, compose_map(step3, compose_map(step2, step1)))
    return hXZ.ref_of_map(whole)


def unit_iso(X: FiniteSimplicialSet) -> SimplicialMap:
    """r_X : X × Δ[0] → X, with its inverse attached."""
    return canonical_iso("unit_r", X)


def tilde(f: SimplicialMap, D: int) -> SimplexRef:
    """The 0-simplex of usSet(X, Y) whose underlying map is f ∘ r_X."""
    h = function_complex(f.dom, f.cod, D)
    return h.ref_of_map(compose_map(f, unit_iso(f.dom)))


def untilde(s: SimplexRef, h: FunctionComplex) -> SimplicialMap:
    """Inverse of :func:`tilde`: a 0-simplex back to a map X → Y."""
    if s.dim != 0:
        raise ValueError("untilde expects a 0-simplex")
    F = h.underlying(s)
    g = compose_map(F, unit_iso(h.source).inverse)
    out = SimplicialMap(h.source, h.target, rule=g.on, name=f"untilde{s.base}")
    return out.materialize()


def degenerate_to(h: FiniteSimplicialSet, s: SimplexRef, n: int) -> SimplexRef:
    """(σ_0^n)^* of a 0-simplex."""
    return h.act(s, mono.constant(n))


def ev(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, D: int) -> SimplicialMap:
    """ev : X × usSet(X, Y) → Y, (x_n, f) ↦ f_n(x_n, id_n)."""
    h = function_complex(X, Y, D)
    P = times(X, h)
    return SimplicialMap(P, Y, rule=lambda x: h.evaluate(x[1], x[0]), up_to=D, name=f"ev[{X.name},{Y.name}]")


def sharp(u: SimplicialMap, via: str = "pointwise") -> SimplicialMap:
    """Currying sSet(K, usSet(X, Y)) → sSet(X × K, Y).

    ``via="pointwise"`` uses (x_n, k_n) ↦ (u_n(k_n))_n(x_n, id_n);
    ``via="composite"`` builds ev ∘ (id_X × u).
    """
    h = u.cod
    if not isinstance(h, FunctionComplex):
        raise ValueError("sharp expects a map into a function complex")
    X, Y, K = h.source, h.target, u.dom
    P = times(X, K)
    if via == "composite":
        e = ev(X, Y, h.trunc_dim)
        whole = compose_map(e, product_map(identity_map(X), u))
        return SimplicialMap(P, Y, rule=whole.on, up_to=whole.up_to, name=f"sharp({u.label()})")
    if via != "pointwise":
        raise ValueError(f"unknown route {via!r}")
    return SimplicialMap(
        P, Y, rule=lambda x: h.evaluate(u(x[1]), x[0]), up_to=int(min(u.reach, P.bound)), name=f"sharp({u.label()})"
    )


def sharp_inv(g: SimplicialMap, D: int, up_to: int | None = None) -> SimplicialMap:
    """Inverse currying: g : X × K → Y gives K → usSet(X, Y), k_n ↦ g ∘ (id_X × yoneda(k_n))."""
    P = g.dom
    X, K = P.left, P.right
    h = function_complex(X, g.cod, D)
    idX = identity_map(X)

    def rule(k):
        n = K.dim_of(k)
        return h.ref_of_map(compose_map(g, product_map(idX, yoneda(K, nd(k, n)))))

    bound = K.bound if up_to is None else up_to
    return SimplicialMap(K, h, rule=rule, up_to=min(bound, D), name=f"sharp_inv({g.label()})")


def compose_levelwise(g: SimplicialMap, f: SimplicialMap, up_to: int) -> SimplicialMap:
    """g ∘ f compared only up to ``up_to``."""
    return compose_map(g, f).restrict(up_to)

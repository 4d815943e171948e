"""Simplicial maps, stored as their values on nondegenerate simplices."""

from __future__ import annotations

from typing import Callable, Hashable, Mapping

from . import monotone as mono
from .sset import FiniteSimplicialSet, SimplexRef, TruncationError, nd, standard_simplex, simplex_of


class SimplicialMap:
    """A map dom → cod, defined on nondegenerate simplices up to ``up_to``.

    Values are either given up front (``assign``) or produced on demand by
    ``rule(x)`` for a nondegenerate id ``x`` and then cached.  Two maps are
    equal when their assignments agree on every nondegenerate simplex.
    """

    def __init__(
        self,
        dom: FiniteSimplicialSet,
        cod: FiniteSimplicialSet,
        assign: Mapping[Hashable, SimplexRef] | None = None,
        *,
        rule: Callable[[Hashable], SimplexRef] | None = None,
        up_to: int | None = None,
        name: str | None = None,
    ):
        self.dom = dom
        self.cod = cod
        self._assign = dict(assign or {})
        self._rule = rule
        self.up_to = dom.bound if up_to is None else up_to
        self.name = name
        self._key = None
        self.inverse: SimplicialMap | None = None

    @property
    def reach(self) -> float:
        """Highest dimension of simplices the map can be applied to."""
        if self.dom.complete and self.up_to >= self.dom.top:
            return float("inf")
        return self.up_to

    def on(self, x: Hashable) -> SimplexRef:
        got = self._assign.get(x)
        if got is None:
            if self._rule is None:
                raise KeyError(f"{self.label()} has no value on {x!r}")
            if self.dom.dim_of(x) > self.up_to:
                raise TruncationError(
                    f"{self.label()} is only defined up to dimension {self.up_to}",
                    required=self.dom.dim_of(x),
                )
            got = self._rule(x)
            self._assign[x] = got
        return got

    def __call__(self, s: SimplexRef) -> SimplexRef:
        value = self.on(s.base)
        if s.deg[-1] == len(s.deg) - 1:
            return value
        return self.cod.act(value, s.deg)

    def nondeg_domain(self):
        for n in range(self.up_to + 1):
            for x in self.dom.nondeg(n):
                yield x

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(self.on(x) for x in self.nondeg_domain())
        return self._key

    def materialize(self) -> "SimplicialMap":
        self.key()
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.dom is other.dom and self.cod is other.cod and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((id(self.dom), id(self.cod), self.key()))

    def label(self) -> str:
        return self.name or f"{self.dom.name}->{self.cod.name}"

    def __repr__(self) -> str:
        return f"<SimplicialMap {self.label()}>"

    def restrict(self, n: int) -> "SimplicialMap":
        """The same map, compared only on simplices of dimension <= n."""
        return SimplicialMap(self.dom, self.cod, rule=self.on, up_to=min(n, self.up_to), name=self.name)


def identity_map(X: FiniteSimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, rule=lambda x: nd(x, X.dim_of(x)), name=f"id_{X.name}")


def compose_map(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """g ∘ f."""
    if f.cod is not g.dom:
        raise ValueError(f"cannot compose {g.label()} after {f.label()}: {f.cod.name} is not {g.dom.name}")
    return SimplicialMap(
        f.dom,
        g.cod,
        rule=lambda x: g(f.on(x)),
        up_to=int(min(f.up_to, g.reach)),
        name=f"{g.label()}.{f.label()}",
    )


def constant_map(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, vertex: SimplexRef) -> SimplicialMap:
    """The map collapsing X onto a vertex of Y."""
    return SimplicialMap(
        X, Y, rule=lambda x: SimplexRef(vertex.base, mono.constant(X.dim_of(x))), name=f"const_{vertex.base}"
    )


def yoneda(K: FiniteSimplicialSet, k: SimplexRef) -> SimplicialMap:
    """The classifying map Δ[n] → K sending the top simplex to k."""
    n = k.dim
    K.check_level(n)
    D = standard_simplex(n)
    return SimplicialMap(D, K, rule=lambda v: K.act(k, v), name=f"yoneda({k.base})")


def is_iso(f: SimplicialMap) -> tuple[bool, SimplicialMap | None]:
    """Whether f is bijective on every level (up to the shared bound), plus its inverse."""
    dom, cod = f.dom, f.cod
    caps = [s.trunc_dim for s in (dom, cod) if not s.complete]
    limit = min(caps) if caps else max(dom.top, cod.top)
    preimage: dict[SimplexRef, SimplexRef] = {}
    for n in range(limit + 1):
        src, dst = dom.level(n), cod.level(n)
        if len(src) != len(dst):
            return False, None
        for s in src:
            t = f(s)
            if t in preimage:
                return False, None
            preimage[t] = s
    inv = SimplicialMap(
        cod,
        dom,
        rule=lambda y: preimage[nd(y, cod.dim_of(y))],
        up_to=cod.bound if cod.complete else min(limit, cod.bound),
        name=f"inv({f.label()})",
    )
    inv.materialize()
    f.inverse, inv.inverse = inv, f
    return True, inv

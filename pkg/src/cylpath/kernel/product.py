"""Binary products of simplicial sets and the maps built from them."""

from __future__ import annotations

from typing import Hashable

from . import monotone as mono
from .maps import SimplicialMap
from .sset import FiniteSimplicialSet, SimplexRef, nd, standard_simplex


class ProductSet(FiniteSimplicialSet):
    """X × Y, built level by level.

    A nondegenerate n-simplex is a pair (a, b) of n-simplices whose
    degeneracies are jointly injective; its id is that pair of refs.
    """

    def __init__(self, left: FiniteSimplicialSet, right: FiniteSimplicialSet):
        caps = [s.trunc_dim for s in (left, right) if not s.complete]
        super().__init__(f"({left.name}x{right.name})", trunc_dim=min(caps) if caps else None)
        self.left, self.right = left, right
        if not caps:
            self._top = -1 if min(left.top, right.top) < 0 else left.top + right.top
        self.pr1 = SimplicialMap(self, left, rule=lambda x: x[0], name=f"pr1{self.name}")
        self.pr2 = SimplicialMap(self, right, rule=lambda x: x[1], name=f"pr2{self.name}")

    def _build(self, n: int) -> None:
        L, R = self.left, self.right
        for p in range(n + 1):
            for a in L.nondeg(p):
                for q in range(n - p, n + 1):
                    for b in R.nondeg(q):
                        for e1, e2 in mono.lattice_paths(n, p, q):
                            x = (SimplexRef(a, e1), SimplexRef(b, e2))
                            faces = tuple(self.face_pair(x[0], x[1], i) for i in range(n + 1)) if n else ()
                            self._add(x, n, faces)

    def face_pair(self, ra: SimplexRef, rb: SimplexRef, i: int) -> SimplexRef:
        d = mono.coface(ra.dim, i)
        return self.pair(self.left.act(ra, d), self.right.act(rb, d))

    def pair(self, ra: SimplexRef, rb: SimplexRef) -> SimplexRef:
        """Canonical ref of the n-simplex (ra, rb)."""
        e1, e2 = ra.deg, rb.deg
        keep = [0]
        eta = [0]
        for i in range(1, len(e1)):
            if e1[i] != e1[i - 1] or e2[i] != e2[i - 1]:
                keep.append(i)
            eta.append(len(keep) - 1)
        if len(keep) == len(e1):
            return SimplexRef((ra, rb), tuple(eta))
        base = (
            SimplexRef(ra.base, tuple(e1[i] for i in keep)),
            SimplexRef(rb.base, tuple(e2[i] for i in keep)),
        )
        return SimplexRef(base, tuple(eta))

    def components(self, s: SimplexRef) -> tuple[SimplexRef, SimplexRef]:
        a, b = s.base
        if s.is_nondegenerate():
            return a, b
        return SimplexRef(a.base, mono.compose(a.deg, s.deg)), SimplexRef(b.base, mono.compose(b.deg, s.deg))

    def act(self, s: SimplexRef, theta) -> SimplexRef:
        key = (s, theta)
        got = self._act_cache.get(key)
        if got is None:
            if self.trunc_dim is not None:
                self.check_level(max(len(theta), len(s.deg)) - 1)
            a, b = self.components(s)
            got = self.pair(self.left.act(a, theta), self.right.act(b, theta))
            self._act_cache[key] = got
        return got

    def dim_of(self, x: Hashable) -> int:
        return x[0].dim


_products: dict[tuple[int, int], ProductSet] = {}


def times(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> ProductSet:
    """The product X × Y; one shared object per (X, Y) pair."""
    key = (id(X), id(Y))
    P = _products.get(key)
    if P is None or P.left is not X or P.right is not Y:
        P = ProductSet(X, Y)
        _products[key] = P
    return P


def product(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> tuple[ProductSet, SimplicialMap, SimplicialMap]:
    P = times(X, Y)
    return P, P.pr1, P.pr2


def pairing(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """(f, g) : T → X × Y."""
    if f.dom is not g.dom:
        raise ValueError("pairing needs maps with a common domain")
    P = times(f.cod, g.cod)
    T = f.dom
    return SimplicialMap(
        T, P, rule=lambda t: P.pair(f.on(t), g.on(t)), up_to=min(f.up_to, g.up_to),
        name=f"({f.label()},{g.label()})",
    )


def product_map(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """f × g : A × B → C × D."""
    src, dst = times(f.dom, g.dom), times(f.cod, g.cod)
    return SimplicialMap(
        src, dst, rule=lambda x: dst.pair(f(x[0]), g(x[1])), up_to=int(min(f.reach, g.reach, src.bound)),
        name=f"{f.label()}x{g.label()}",
    )


def diagonal(X: FiniteSimplicialSet) -> SimplicialMap:
    P = times(X, X)
    return SimplicialMap(X, P, rule=lambda x: P.pair(nd(x, X.dim_of(x)), nd(x, X.dim_of(x))), name=f"diag_{X.name}")


def _iso_pair(forward: SimplicialMap, backward: SimplicialMap) -> SimplicialMap:
    forward.inverse, backward.inverse = backward, forward
    return forward


def canonical_iso(kind: str, *operands: FiniteSimplicialSet) -> SimplicialMap:
    """assoc: (X×Y)×Z → X×(Y×Z); swap: X×Y → Y×X; unit_r: X×Δ[0] → X.

    The returned map carries its inverse in ``.inverse``.
    """
    if kind == "assoc":
        if len(operands) != 3:
            raise ValueError("assoc needs three operands")
        X, Y, Z = operands
        XY, YZ = times(X, Y), times(Y, Z)
        L, R = times(XY, Z), times(X, YZ)

        def fwd(x):
            a, b = XY.components(x[0])
            return R.pair(a, YZ.pair(b, x[1]))

        def bwd(x):
            b, c = YZ.components(x[1])
            return L.pair(XY.pair(x[0], b), c)

        return _iso_pair(
            SimplicialMap(L, R, rule=fwd, name=f"assoc({X.name},{Y.name},{Z.name})"),
            SimplicialMap(R, L, rule=bwd, name=f"assoc_inv({X.name},{Y.name},{Z.name})"),
        )
    if kind == "swap":
        if len(operands) != 2:
            raise ValueError("swap needs two operands")
        X, Y = operands
        A, B = times(X, Y), times(Y, X)
        return _iso_pair(
            SimplicialMap(A, B, rule=lambda x: B.pair(x[1], x[0]), name=f"swap({X.name},{Y.name})"),
            SimplicialMap(B, A, rule=lambda x: A.pair(x[1], x[0]), name=f"swap({Y.name},{X.name})"),
        )
    if kind == "unit_r":
        if len(operands) != 1:
            raise ValueError("unit_r needs one operand")
        (X,) = operands
        P = times(X, standard_simplex(0))

        def back(x):
            n = X.dim_of(x)
            return P.pair(nd(x, n), SimplexRef((0,), mono.constant(n)))

        return _iso_pair(
            SimplicialMap(P, X, rule=lambda x: x[0], name=f"r_{X.name}"),
            SimplicialMap(X, P, rule=back, name=f"r_{X.name}^-1"),
        )
    raise ValueError(f"unknown canonical iso kind {kind!r}")

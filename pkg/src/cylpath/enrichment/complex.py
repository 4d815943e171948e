"""Function complexes: the n-simplices of usSet(X, Y) are the maps X × Δ[n] → Y."""

from __future__ import annotations

from ..kernel import monotone as mono
from ..kernel.enumerate import enumerate_maps
from ..kernel.maps import SimplicialMap
from ..kernel.product import ProductSet, times
from ..kernel.sset import FiniteSimplicialSet, SimplexRef, TruncationError, nd, simplex_of, standard_simplex


def slice_product(X: FiniteSimplicialSet, n: int) -> ProductSet:
    return times(X, standard_simplex(n))


def precompose_operator(F: SimplicialMap, theta: mono.Values) -> SimplicialMap:
    """F · θ = F ∘ (id_X × Δ[θ]) for F : X × Δ[n] → Y and θ : [m] → [n]."""
    P_n: ProductSet = F.dom
    X = P_n.left
    P_m = slice_product(X, len(theta) - 1)

    def rule(x):
        a, b = x
        moved = simplex_of(mono.compose(theta, tuple(b.base[e] for e in b.deg)))
        return F(P_n.pair(a, moved))

    return SimplicialMap(P_m, F.cod, rule=rule, up_to=int(min(F.reach, P_m.bound)))


class FunctionComplex(FiniteSimplicialSet):
    """usSet(X, Y), materialized lazily level by level up to ``trunc_dim``.

    Level n is computed by enumerating every map X × Δ[n] → Y.  A map is
    degenerate iff it is fixed by s_j d_j for some j, and those j determine
    its degeneracy surjection; the remaining maps become the nondegenerate
    simplices, with ids ``(n, i)``.
    """

    def __init__(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet, trunc_dim: int):
        super().__init__(f"[{source.name},{target.name}]", trunc_dim=trunc_dim)
        self.source, self.target = source, target
        self._underlying: dict = {}
        self._tables: dict[int, dict[tuple, SimplexRef]] = {}
        self._maps_cache: dict[SimplexRef, SimplicialMap] = {}

    def required_target_level(self, n: int) -> int:
        return (self.source.top + n) if self.source.complete else self.source.trunc_dim

    def _build(self, n: int) -> None:
        P = slice_product(self.source, n)
        need = P.bound
        try:
            self.target.check_level(need)
        except TruncationError:
            raise TruncationError(
                f"{self.name} level {n} needs {self.target.name} up to dimension {need}", required=need
            ) from None
        table: dict[tuple, SimplexRef] = {}
        count = 0
        for F in enumerate_maps(P, self.target):
            k = F.key()
            collapsed = [j for j in range(n) if precompose_operator(F, mono.compose(mono.coface(n, j), mono.codegeneracy(n - 1, j))).key() == k]
            if not collapsed:
                x = (n, count)
                count += 1
                faces = tuple(self._lookup(n - 1, precompose_operator(F, mono.coface(n, i))) for i in range(n + 1)) if n else ()
                self._add(x, n, faces)
                F.name = f"{self.name}:{x}"
                self._underlying[x] = F
                table[k] = nd(x, n)
            else:
                eta, run = [0], 0
                for j in range(n):
                    run += 0 if j in collapsed else 1
                    eta.append(run)
                section = tuple(eta.index(v) for v in range(run + 1))
                base = self._lookup(run, precompose_operator(F, section))
                table[k] = SimplexRef(base.base, tuple(eta))
        self._tables[n] = table

    def _lookup(self, n: int, F: SimplicialMap) -> SimplexRef:
        self._ensure(n)
        got = self._tables[n].get(F.key())
        if got is None:
            raise KeyError(f"map is not an {n}-simplex of {self.name}")
        return got

    # -- public surface ------------------------------------------------
    def ref_of_map(self, F: SimplicialMap) -> SimplexRef:
        """The simplex whose underlying map is F : X × Δ[n] → Y."""
        P = F.dom
        if not isinstance(P, ProductSet) or P.left is not self.source:
            raise ValueError(f"{F.label()} is not a map out of {self.source.name} x Delta[n]")
        n = P.right.top
        self.check_level(n)
        return self._lookup(n, F)

    def underlying(self, s: SimplexRef) -> SimplicialMap:
        """The map X × Δ[n] → Y carried by the n-simplex s."""
        got = self._maps_cache.get(s)
        if got is None:
            self.check_level(s.dim)
            self._ensure(s.base[0])
            base = self._underlying[s.base]
            got = base if s.is_nondegenerate() else precompose_operator(base, s.deg)
            self._maps_cache[s] = got
        return got

    def evaluate(self, F: SimplexRef, x: SimplexRef) -> SimplexRef:
        """F̂_n(x, id_[n]) for an n-simplex F and an n-simplex x of the source."""
        G = self._underlying_base(F)
        P: ProductSet = G.dom
        return G(P.pair(x, simplex_of(F.deg)))

    def _underlying_base(self, F: SimplexRef) -> SimplicialMap:
        self._ensure(F.base[0])
        return self._underlying[F.base]

    def all_maps(self, n: int) -> list[SimplicialMap]:
        return [self.underlying(s) for s in self.level(n)]


_complexes: dict[tuple[int, int, int], FunctionComplex] = {}


def function_complex(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, D: int) -> FunctionComplex:
    """usSet(X, Y) truncated at D; one shared object per (X, Y, D)."""
    if D < 0:
        raise ValueError("truncation must be >= 0")
    key = (id(X), id(Y), D)
    got = _complexes.get(key)
    if got is None or got.source is not X or got.target is not Y:
        got = FunctionComplex(X, Y, D)
        _complexes[key] = got
    return got

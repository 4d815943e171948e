"""Small named simplicial sets used as fixtures."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .sset import FiniteSimplicialSet, nd, standard_simplex


def sub_simplex(name: str, n: int, generators) -> FiniteSimplicialSet:
    """The subcomplex of Δ[n] generated by the given vertex tuples."""
    keep = set()
    for g in generators:
        g = tuple(g)
        for m in range(len(g)):
            keep.update(combinations(g, m + 1))
    simplices: dict[int, list] = {}
    for v in sorted(keep, key=lambda t: (len(t), t)):
        simplices.setdefault(len(v) - 1, []).append(v)
    faces = {
        v: tuple(nd(v[:i] + v[i + 1:], len(v) - 2) for i in range(len(v)))
        for v in keep if len(v) > 1
    }
    return FiniteSimplicialSet(name, simplices, faces)


@lru_cache(maxsize=None)
def boundary(n: int) -> FiniteSimplicialSet:
    """∂Δ[n]."""
    return sub_simplex(f"dDelta[{n}]", n, [v for v in combinations(range(n + 1), n)])


@lru_cache(maxsize=None)
def horn(n: int, k: int) -> FiniteSimplicialSet:
    """Λ^k[n]: ∂Δ[n] without its k-th face."""
    faces = [tuple(i for i in range(n + 1) if i != j) for j in range(n + 1) if j != k]
    return sub_simplex(f"Horn{k}[{n}]", n, faces)


def disjoint_union(name: str, *parts: FiniteSimplicialSet) -> FiniteSimplicialSet:
    simplices: dict[int, list] = {}
    faces = {}
    for i, X in enumerate(parts):
        for n in range(X.top + 1):
            for x in X.nondeg(n):
                simplices.setdefault(n, []).append((i, x))
                if n:
                    faces[(i, x)] = tuple(f._replace(base=(i, f.base)) for f in X.faces_of(x))
    return FiniteSimplicialSet(name, simplices, faces)


@lru_cache(maxsize=None)
def two_points() -> FiniteSimplicialSet:
    """∂Δ[1], i.e. Δ[0] ⊔ Δ[0]."""
    return boundary(1)


def delta(n: int) -> FiniteSimplicialSet:
    return standard_simplex(n)


NAMED = {
    "delta0": lambda: standard_simplex(0),
    "delta1": lambda: standard_simplex(1),
    "delta2": lambda: standard_simplex(2),
    "delta3": lambda: standard_simplex(3),
    "boundary1": lambda: boundary(1),
    "boundary2": lambda: boundary(2),
    "horn1_2": lambda: horn(2, 1),
    "two_points": two_points,
}


def named(name: str) -> FiniteSimplicialSet:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown built-in simplicial set {name!r}; known: {', '.join(sorted(NAMED))}") from None

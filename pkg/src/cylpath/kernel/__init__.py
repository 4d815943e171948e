"""Finite simplicial sets: canonical forms, maps, products, enumeration."""

from .enumerate import count_maps, enumerate_maps
from .maps import SimplicialMap, compose_map, constant_map, identity_map, is_iso, yoneda
from .monotone import Injection, MonotoneMap, Surjection
from .product import ProductSet, canonical_iso, diagonal, pairing, product, product_map, times
from .sset import (
    FiniteSimplicialSet,
    SimplexRef,
    TruncationError,
    empty_sset,
    nd,
    simplex_of,
    standard_simplex,
    top_simplex,
    values_of,
)
from .validate import validate_map, validate_sset
from .zoo import boundary, disjoint_union, horn, named, two_points


def factor_monotone(f: MonotoneMap) -> tuple[Surjection, Injection]:
    """Epi-mono factorization f = ι ∘ η."""
    from . import monotone as mono

    sur, inj = mono.factor(f.values)
    return Surjection(sur, len(inj) - 1), Injection(inj, f.target_dim)


def act(X: FiniteSimplicialSet, s: SimplexRef, theta) -> SimplexRef:
    values = theta.values if isinstance(theta, MonotoneMap) else tuple(theta)
    return X.act(s, values)


def compose(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    return compose_map(g, f)
